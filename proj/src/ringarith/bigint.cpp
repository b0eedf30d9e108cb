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

#include "ringarith/bigint.hpp"

#include "ringarith/errors.hpp"
#include "ringarith/field.hpp"

namespace mp {

uint64_t mpz_mod_u64(const mpz_class& x, uint64_t m) {
  mpz_class r;
  mpz_class mm;
  mpz_import(mm.get_mpz_t(), 1, -1, sizeof(uint64_t), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
  uint64_t out = 0;
  size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(uint64_t), 0, 0, r.get_mpz_t());
  return out;
}

namespace {

mpz_class from_u64(uint64_t x) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(uint64_t), 0, 0, &x);
  return r;
}

// Inverse of m mod p, or fail when they share a factor.
uint64_t inverse_mod(const mpz_class& m, uint64_t p) {
  mpz_class inv, pp = from_u64(p);
  if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()) == 0) {
    fail(Err::Structural, "crt_combine: moduli are not coprime");
  }
  return mpz_mod_u64(inv, p);
}

}  // namespace

BigIntResidue crt_combine(const BigIntResidue& acc, uint64_t r, uint64_t p) {
  if (p < 2) fail(Err::Structural, "crt_combine: modulus below 2");
  uint64_t minv = inverse_mod(acc.modulus, p);
  uint64_t a = mpz_mod_u64(acc.value, p);
  uint64_t rr = r % p;
  uint64_t diff = rr >= a ? rr - a : rr + p - a;
  uint64_t t = mulmod64(diff, minv, p);
  BigIntResidue out;
  out.value = acc.value + acc.modulus * from_u64(t);
  out.modulus = acc.modulus * from_u64(p);
  return out;
}

void crt_combine(ResidueGrid& acc, const std::vector<uint64_t>& residues, uint64_t p) {
  if (residues.size() != acc.cells.size()) fail(Err::Structural, "crt_combine: grid shape mismatch");
  uint64_t minv = inverse_mod(acc.modulus, p);
  mpz_class step;
  for (size_t i = 0; i < acc.cells.size(); ++i) {
    uint64_t a = mpz_mod_u64(acc.cells[i], p);
    uint64_t rr = residues[i] % p;
    uint64_t diff = rr >= a ? rr - a : rr + p - a;
    uint64_t t = mulmod64(diff, minv, p);
    if (t) acc.cells[i] += acc.modulus * from_u64(t);
  }
  acc.modulus *= from_u64(p);
}

mpz_class signed_lift(const mpz_class& value, const mpz_class& modulus) {
  mpz_class v;
  mpz_fdiv_r(v.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  if (2 * v > modulus) v -= modulus;
  return v;
}

mpz_class signed_lift(const BigIntResidue& r) { return signed_lift(r.value, r.modulus); }

}  // namespace mp
