// Copyright 2026 The modpoly Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ringarith/artin.hpp"

#include <algorithm>

namespace mp {

void Artin::check(const Artin& o) const {
  if (c_.size() != o.c_.size()) {
    fail(Err::Structural, "precision mismatch (" + std::to_string(c_.size()) + " vs " +
                              std::to_string(o.c_.size()) + ")");
  }
}

bool Artin::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Fp2& x) { return x.is_zero(); });
}

size_t Artin::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return c_.size();
}

Artin Artin::operator+(const Artin& o) const {
  check(o);
  Artin r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Artin Artin::operator-(const Artin& o) const {
  check(o);
  Artin r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Artin Artin::operator-() const {
  Artin r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

Artin Artin::operator*(const Artin& o) const {
  check(o);
  const size_t n = c_.size();
  Artin r(n);
  size_t va = valuation(), vb = o.valuation();
  for (size_t i = va; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = vb; i + j < n; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

Artin Artin::operator*(const Fp2& s) const {
  Artin r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

Artin Artin::operator+(const Fp2& s) const {
  Artin r = *this;
  if (!r.c_.empty()) r.c_[0] += s;
  return r;
}

Artin Artin::operator-(const Fp2& s) const {
  Artin r = *this;
  if (!r.c_.empty()) r.c_[0] -= s;
  return r;
}

Artin Artin::inv() const {
  if (!is_unit()) fail(Err::NotAUnit, "element divisible by eps");
  const size_t n = c_.size();
  Artin x(c_[0].inv(), 1);
  size_t k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    Artin a = with_prec(k), xk = x.with_prec(k);
    Artin t = a * xk;
    t = -t;
    t.c_[0] += Fp2(2);
    x = xk * t;
  }
  return x;
}

Artin Artin::with_prec(size_t prec) const {
  Artin r(prec);
  for (size_t i = 0; i < std::min(prec, c_.size()); ++i) r.c_[i] = c_[i];
  return r;
}

Artin Artin::shift_down(size_t k) const {
  if (k > c_.size()) fail(Err::Structural, "shift beyond precision");
  for (size_t i = 0; i < k; ++i) {
    if (!c_[i].is_zero()) fail(Err::NotAUnit, "exact shift of an element with lower valuation");
  }
  return Artin(std::vector<Fp2>(c_.begin() + static_cast<long>(k), c_.end()));
}

Artin Artin::shift_up(size_t k) const {
  Artin r(c_.size());
  for (size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

Artin exact_div(const Artin& a, const Artin& b) {
  if (a.prec() != b.prec()) fail(Err::Structural, "precision mismatch in exact_div");
  size_t v = b.valuation();
  if (v >= b.prec()) fail(Err::NotAUnit, "division by zero");
  if (a.valuation() < v) fail(Err::NotAUnit, "dividend has smaller valuation than divisor");
  return a.shift_down(v) * b.shift_down(v).inv();
}

std::string to_string(const Artin& x) {
  std::string s;
  for (size_t i = 0; i < x.prec(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(x[i]) + ")";
    if (i == 1) s += "e";
    if (i > 1) s += "e^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace mp
