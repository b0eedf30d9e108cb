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

#include <cstddef>
#include <string>
#include <vector>

#include "ringarith/field.hpp"

namespace mp {

// Element of R = F_{p^2}[eps]/(eps^prec), stored densely. The precision is part
// of the value: mixing precisions in one operation is a structural error.
class Artin {
 public:
  Artin() = default;
  explicit Artin(size_t prec) : c_(prec) {}
  Artin(const Fp2& c0, size_t prec) : c_(prec) {
    if (prec) c_[0] = c0;
  }
  explicit Artin(std::vector<Fp2> coeffs) : c_(std::move(coeffs)) {}
  static Artin eps(size_t prec, size_t k = 1) {
    Artin r(prec);
    if (k < prec) r.c_[k] = Fp2(1);
    return r;
  }

  size_t prec() const { return c_.size(); }
  const Fp2& operator[](size_t i) const { return c_[i]; }
  Fp2& operator[](size_t i) { return c_[i]; }
  const std::vector<Fp2>& coeffs() const { return c_; }
  Fp2 residue() const { return c_.empty() ? Fp2() : c_[0]; }

  bool is_zero() const;
  bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }
  // Largest k with eps^k | x; equals prec() for zero.
  size_t valuation() const;

  bool operator==(const Artin& o) const { return c_ == o.c_; }
  bool operator!=(const Artin& o) const { return c_ != o.c_; }

  Artin operator+(const Artin& o) const;
  Artin operator-(const Artin& o) const;
  Artin operator-() const;
  Artin operator*(const Artin& o) const;
  Artin operator*(const Fp2& s) const;
  Artin operator+(const Fp2& s) const;
  Artin operator-(const Fp2& s) const;
  Artin& operator+=(const Artin& o) { return *this = *this + o; }
  Artin& operator-=(const Artin& o) { return *this = *this - o; }
  Artin& operator*=(const Artin& o) { return *this = *this * o; }

  // Newton iteration x <- x(2 - a x), doubling the precision each round.
  Artin inv() const;
  Artin operator/(const Artin& o) const { return *this * o.inv(); }

  // Truncate or zero-extend.
  Artin with_prec(size_t prec) const;
  // x / eps^k; requires eps^k | x. Result has precision prec() - k.
  Artin shift_down(size_t k) const;
  // x * eps^k at the same precision.
  Artin shift_up(size_t k) const;

 private:
  void check(const Artin& o) const;
  std::vector<Fp2> c_;
};

// a / b for b possibly divisible by eps: divides both by eps^v(b) first.
// Requires v(a) >= v(b); the result has precision prec - v(b).
Artin exact_div(const Artin& a, const Artin& b);

std::string to_string(const Artin& x);

// Helpers so generic code can build constants matching an operand's ring.
inline Fp zero_like(const Fp&) { return Fp(); }
inline Fp2 zero_like(const Fp2&) { return Fp2(); }
inline Fp2 const_like(const Fp2&, const Fp2& c) { return c; }
inline Fp4 zero_like(const Fp4&) { return Fp4(); }
inline Fp4 const_like(const Fp4&, const Fp2& c) { return Fp4::embed(c); }
inline Artin zero_like(const Artin& x) { return Artin(x.prec()); }
inline Artin const_like(const Artin& x, const Fp2& c) { return Artin(c, x.prec()); }

inline Fp2 residue(const Fp2& x) { return x; }
inline Fp2 residue(const Artin& x) { return x.residue(); }
inline bool is_unit(const Fp2& x) { return !x.is_zero(); }
inline bool is_unit(const Fp4& x) { return !x.is_zero(); }
inline bool is_unit(const Artin& x) { return x.is_unit(); }
inline Fp2 inv(const Fp2& x) { return x.inv(); }
inline Fp4 inv(const Fp4& x) { return x.inv(); }
inline Artin inv(const Artin& x) { return x.inv(); }

}  // namespace mp
