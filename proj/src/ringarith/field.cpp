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

#include "ringarith/field.hpp"

namespace mp {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  static const uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (uint64_t q : small) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (uint64_t a : small) {
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

Fp Fp::inv() const {
  if (v == 0) fail(Err::NotAUnit, "inverse of zero in F_p");
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr_ = static_cast<int64_t>(v);
  while (nr_ != 0) {
    int64_t q = r / nr_;
    int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr_;
    r = nr_;
    nr_ = tmp;
  }
  return Fp(t);
}

bool Fp::is_square() const {
  if (v == 0) return true;
  return powmod64(v, (p - 1) / 2, p) == 1;
}

std::optional<Fp> Fp::sqrt() const {
  if (v == 0) return Fp();
  if (!is_square()) return std::nullopt;
  if (p % 4 == 3) return pow((p + 1) / 4);
  // Tonelli-Shanks
  uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z(2);
  while (z.is_square()) z = z + Fp(1);
  Fp c = z.pow(q), x = pow((q + 1) / 2), t = pow(q);
  int m = s;
  while (t != Fp(1)) {
    int i = 0;
    Fp tt = t;
    while (tt != Fp(1)) {
      tt = tt * tt;
      ++i;
    }
    Fp b = c;
    for (int k = 0; k < m - i - 1; ++k) b = b * b;
    x = x * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  return x;
}

bool fp2_is_square(const Fp2& x) { return x.norm().is_square(); }

std::optional<Fp2> fp2_sqrt(const Fp2& x) {
  if (x.is_zero()) return Fp2();
  if (x.b.is_zero()) {
    if (auto r = x.a.sqrt()) return Fp2(*r, Fp());
    auto r = (x.a / Fp2::nr).sqrt();
    return Fp2(Fp(), *r);
  }
  auto n = x.norm().sqrt();
  if (!n) return std::nullopt;
  Fp half = Fp(2).inv();
  Fp t = (x.a + *n) * half;
  if (!t.is_square()) t = (x.a - *n) * half;
  auto a0 = t.sqrt();
  if (!a0 || a0->is_zero()) return std::nullopt;
  Fp b0 = x.b / (Fp(2) * *a0);
  return Fp2(*a0, b0);
}

uint64_t FieldScope::smallest_nonresidue(uint64_t p) {
  for (uint64_t d = 2; d < p; ++d) {
    if (powmod64(d, (p - 1) / 2, p) == p - 1) return d;
  }
  fail(Err::InvalidArgument, "no quadratic non-residue");
}

FieldScope::FieldScope(uint64_t p) : old_p_(Fp::p), old_d_(Fp2::nr), old_nu_(Fp4::nr) {
  if (p < 3 || (p >> 62) != 0 || !is_prime_u64(p)) fail(Err::InvalidArgument, "modulus must be an odd prime below 2^62");
  Fp::p = p;
  Fp2::nr = Fp::from_u64(smallest_nonresidue(p));
  for (int64_t k = 0;; ++k) {
    Fp2 c(Fp(k), Fp(1));
    if (!fp2_is_square(c)) {
      Fp4::nr = c;
      break;
    }
  }
}

FieldScope::~FieldScope() {
  Fp::p = old_p_;
  Fp2::nr = old_d_;
  Fp4::nr = old_nu_;
}

Fp random_fp(Rng& rng) { return Fp::from_u64(rng()); }
Fp2 random_fp2(Rng& rng) { return Fp2(random_fp(rng), random_fp(rng)); }

std::string to_string(const Fp& x) { return std::to_string(x.v); }
std::string to_string(const Fp2& x) {
  if (x.b.is_zero()) return std::to_string(x.a.v);
  return std::to_string(x.a.v) + "+" + std::to_string(x.b.v) + "w";
}

}  // namespace mp
