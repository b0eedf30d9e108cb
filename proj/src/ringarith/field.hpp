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

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ringarith/errors.hpp"

namespace mp {

using Rng = std::mt19937_64;

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m);
bool is_prime_u64(uint64_t n);

// Residue mod the thread's current prime (see FieldScope). Canonical in [0, p).
struct Fp {
  uint64_t v = 0;

  static inline thread_local uint64_t p = 0;

  Fp() = default;
  explicit Fp(int64_t x) {
    int64_t r = x % static_cast<int64_t>(p);
    v = static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(p) : r);
  }
  static Fp raw(uint64_t x) {
    Fp r;
    r.v = x;
    return r;
  }
  static Fp from_u64(uint64_t x) { return raw(x % p); }

  bool is_zero() const { return v == 0; }
  bool operator==(const Fp& o) const { return v == o.v; }
  bool operator!=(const Fp& o) const { return v != o.v; }

  Fp operator+(const Fp& o) const {
    uint64_t s = v + o.v;
    return raw(s >= p ? s - p : s);
  }
  Fp operator-(const Fp& o) const { return raw(v >= o.v ? v - o.v : v + p - o.v); }
  Fp operator-() const { return raw(v == 0 ? 0 : p - v); }
  Fp operator*(const Fp& o) const { return raw(mulmod64(v, o.v, p)); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const;
  Fp pow(uint64_t e) const { return raw(powmod64(v, e, p)); }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  bool is_square() const;
  std::optional<Fp> sqrt() const;
};

// B[w]/(w^2 - nr) for a non-square nr of B; nr is per thread, set by FieldScope.
template <class B>
struct Quad {
  B a, b;

  static inline thread_local B nr;

  Quad() = default;
  explicit Quad(int64_t x) : a(x), b() {}
  Quad(const B& x, const B& y) : a(x), b(y) {}
  static Quad embed(const B& x) { return Quad(x, B()); }

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Quad& o) const { return !(*this == o); }

  Quad operator+(const Quad& o) const { return {a + o.a, b + o.b}; }
  Quad operator-(const Quad& o) const { return {a - o.a, b - o.b}; }
  Quad operator-() const { return {-a, -b}; }
  Quad operator*(const Quad& o) const {
    B t0 = a * o.a, t1 = b * o.b;
    B mid = (a + b) * (o.a + o.b) - t0 - t1;
    return {t0 + nr * t1, mid};
  }
  Quad operator*(const B& s) const { return {a * s, b * s}; }
  Quad& operator+=(const Quad& o) { return *this = *this + o; }
  Quad& operator-=(const Quad& o) { return *this = *this - o; }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }

  Quad conj() const { return {a, -b}; }
  B norm() const { return a * a - nr * b * b; }
  Quad inv() const {
    B n = norm();
    if (n.is_zero()) fail(Err::NotAUnit, "inverse of zero");
    B ni = n.inv();
    return {a * ni, -(b * ni)};
  }
  Quad operator/(const Quad& o) const { return *this * o.inv(); }
  template <class E>
  Quad pow(E e) const {
    Quad r(1), x = *this;
    while (e) {
      if (e & 1) r = r * x;
      x = x * x;
      e >>= 1;
    }
    return r;
  }
};

using Fp2 = Quad<Fp>;
using Fp4 = Quad<Fp2>;

bool fp2_is_square(const Fp2& x);
std::optional<Fp2> fp2_sqrt(const Fp2& x);
// Frobenius x -> x^p on F_{p^2}.
inline Fp2 frob(const Fp2& x) { return x.conj(); }

// Sets the thread's prime and the quadratic non-residues for F_{p^2} and F_{p^4};
// restores the previous context on destruction.
class FieldScope {
 public:
  explicit FieldScope(uint64_t p);
  ~FieldScope();
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

  static uint64_t smallest_nonresidue(uint64_t p);

 private:
  uint64_t old_p_;
  Fp old_d_;
  Fp2 old_nu_;
};

Fp random_fp(Rng& rng);
Fp2 random_fp2(Rng& rng);

std::string to_string(const Fp& x);
std::string to_string(const Fp2& x);

}  // namespace mp
