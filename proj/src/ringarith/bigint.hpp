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

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace mp {

// value in [0, modulus).
struct BigIntResidue {
  mpz_class value{0};
  mpz_class modulus{1};
};

// Square grid of residues sharing one modulus; cell (i, j) at i * dim + j.
struct ResidueGrid {
  size_t dim = 0;
  mpz_class modulus{1};
  std::vector<mpz_class> cells;

  explicit ResidueGrid(size_t d = 0) : dim(d), cells(d * d) {}
};

// x with x = acc mod acc.modulus and x = r mod p, reduced mod acc.modulus * p.
BigIntResidue crt_combine(const BigIntResidue& acc, uint64_t r, uint64_t p);
// Incremental Garner step on every cell; residues are laid out like the grid.
void crt_combine(ResidueGrid& acc, const std::vector<uint64_t>& residues, uint64_t p);

// Representative in (-m/2, m/2].
mpz_class signed_lift(const BigIntResidue& r);
mpz_class signed_lift(const mpz_class& value, const mpz_class& modulus);

uint64_t mpz_mod_u64(const mpz_class& x, uint64_t m);

}  // namespace mp
