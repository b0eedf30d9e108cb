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

#pragma once

#include <atomic>
#include <utility>
#include <vector>

#include "ringarith/artin.hpp"

namespace mp {

// Dense univariate polynomial, c[i] is the coefficient of x^i. Exact-zero top
// coefficients are trimmed by the arithmetic below; over R every coefficient
// carries the same precision.
template <class T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const T& operator[](size_t i) const { return c[i]; }
  const T& lead() const { return c.back(); }
  T coeff(size_t i, const T& like) const { return i < c.size() ? c[i] : zero_like(like); }
  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }
};

using RPoly = Poly<Artin>;

// Crossover above which products go through Kronecker substitution into GMP
// integers, measured as the length of the shorter factor times the eps
// precision (1 over F_{p^2}). tools/bench/kronecker.cpp measures it.
extern std::atomic<int> g_kronecker_threshold;

std::vector<Fp2> kronecker_mul(const std::vector<Fp2>& a, const std::vector<Fp2>& b);
std::vector<Artin> kronecker_mul(const std::vector<Artin>& a, const std::vector<Artin>& b);

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  if (a.c.size() < b.c.size()) return b + a;
  std::vector<T> r = a.c;
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& a) {
  std::vector<T> r;
  r.reserve(a.c.size());
  for (const auto& x : a.c) r.push_back(-x);
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  return a + (-b);
}

template <class T>
std::vector<T> schoolbook_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> r(a.size() + b.size() - 1, zero_like(a[0]));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if constexpr (std::is_same_v<T, Fp2> || std::is_same_v<T, Artin>) {
    size_t weight = std::min(a.c.size(), b.c.size());
    if constexpr (std::is_same_v<T, Artin>) {
      if (weight) weight *= a.c[0].prec();
    }
    if (weight >= static_cast<size_t>(g_kronecker_threshold.load())) {
      return Poly<T>(kronecker_mul(a.c, b.c));
    }
  }
  return Poly<T>(schoolbook_mul(a.c, b.c));
}

template <class T, class S>
Poly<T> scale(const Poly<T>& a, const S& s) {
  std::vector<T> r;
  r.reserve(a.c.size());
  for (const auto& x : a.c) r.push_back(x * s);
  return Poly<T>(std::move(r));
}

template <class T>
T eval(const Poly<T>& a, const T& x) {
  if (a.c.empty()) return zero_like(x);
  T r = a.c.back();
  for (size_t i = a.c.size() - 1; i-- > 0;) r = r * x + a.c[i];
  return r;
}

template <class T>
Poly<T> deriv(const Poly<T>& a) {
  std::vector<T> r;
  for (size_t i = 1; i < a.c.size(); ++i) r.push_back(a.c[i] * Fp2(static_cast<int64_t>(i)));
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> monomial(const T& coef, size_t k) {
  std::vector<T> r(k + 1, zero_like(coef));
  r[k] = coef;
  return Poly<T>(std::move(r));
}

// (x - r) as a polynomial.
template <class T>
Poly<T> linear(const T& r) {
  return Poly<T>({-r, const_like(r, Fp2(1))});
}

// Division with remainder for field coefficients (leading coefficient of b
// must be a unit).
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) fail(Err::Structural, "polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly<T>(), a};
  std::vector<T> rem = a.c;
  std::vector<T> q(a.c.size() - b.c.size() + 1, zero_like(a.c[0]));
  T li = inv(b.lead());
  for (size_t k = q.size(); k-- > 0;) {
    T f = rem[k + b.c.size() - 1] * li;
    q[k] = f;
    for (size_t j = 0; j < b.c.size(); ++j) rem[k + j] -= f * b.c[j];
  }
  rem.resize(b.c.size() - 1);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).first;
}

template <class T>
Poly<T> make_monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return scale(a, inv(a.lead()));
}

// Extended gcd over a field: returns (g, s, t) with s a + t b = g, g monic.
template <class T>
void xgcd(const Poly<T>& a, const Poly<T>& b, Poly<T>& g, Poly<T>& s, Poly<T>& t, const T& like) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0({const_like(like, Fp2(1))}), s1;
  Poly<T> t0, t1({const_like(like, Fp2(1))});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> ns = s0 - q * s1, nt = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero()) {
    g = r0;
    s = s0;
    t = t0;
    return;
  }
  T li = inv(r0.lead());
  g = scale(r0, li);
  s = scale(s0, li);
  t = scale(t0, li);
}

// Balanced product tree of a nonempty list of polynomials.
template <class T>
Poly<T> product_tree(std::vector<Poly<T>> level) {
  if (level.empty()) fail(Err::Structural, "product of an empty list");
  while (level.size() > 1) {
    std::vector<Poly<T>> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level[0]);
}

// Coefficient-wise precision change of an R-polynomial.
RPoly with_prec(const RPoly& f, size_t prec);
// Constant-in-eps embedding of a base-field polynomial.
RPoly embed(const Poly<Fp2>& f, size_t prec);
Poly<Fp2> reduce(const RPoly& f);

// Root of f in R above the simple root alpha of f mod eps. The working
// precision doubles each round: ceil(log2(prec)) rounds in total.
Artin newton_lift(const Fp2& alpha, const RPoly& f);

}  // namespace mp
