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
#include <vector>

#include "diamond/diamond.hpp"

namespace mp {

inline constexpr int64_t kJ0 = 287496;  // j(y^2 = x^3 + 6x^2 + x) = 66^3

bool is_odd_prime(long long l);

// Smallest n (at most 4 ceil(log2 l) + 16) with 2^n - c l = a^2 + 4 b^2,
// c = -l mod 4, and the witness with the smallest a >= 0.
DiamondParams find_diamond_parameters(int ell);
int parameter_cap(int ell);

// Smallest prime p > max(after, 11) with p = -1 mod 2^n c l.
uint64_t next_suitable_prime(const DiamondParams& params, uint64_t after);

// phi_l mod p as a dense (l+2) x (l+2) grid, cells[i * (l+2) + j] being the
// coefficient of X^i Y^j.
struct ModPolyModP {
  int ell = 0;
  uint64_t p = 0;
  std::vector<uint64_t> cells;

  size_t dim() const { return static_cast<size_t>(ell + 2); }
  uint64_t at(size_t i, size_t j) const { return cells[i * dim() + j]; }
  bool operator==(const ModPolyModP& o) const { return ell == o.ell && p == o.p && cells == o.cells; }
};

struct ModpDiagnostics {
  std::vector<Artin> jk;
  std::vector<LiftResult> lifts;
  std::vector<ChainRecord> chains;
  int aux_choice = -1;
};

// The per-prime pipeline: E0, its deformation with j = j(E0) + eps at
// precision l + 2, one diamond lift per l-isogeny, and the re-expansion.
// Throws SkippedPrime (and the other recoverable codes, see is_recoverable)
// when p must be replaced.
ModPolyModP modular_polynomial_modp(int ell, uint64_t p, const DiamondParams& params, uint64_t seed,
                                    ModpDiagnostics* diag = nullptr);

// Errors after which the driver moves on to the next prime.
bool is_recoverable(Err e);

// prod (Y - j_k) over R, re-expanded with eps = X - j0 into an F_{p^2} grid.
std::vector<Fp2> substitute_epsilon(const RPoly& phi, const Fp2& j0);
// Product tree, re-expansion and the enforced post-checks.
ModPolyModP assemble_modp(int ell, const std::vector<Artin>& jk, const Fp2& j0);

// Seeded generator for one (l, p) pipeline.
Rng pipeline_rng(uint64_t seed, int ell, uint64_t p, uint64_t stream);

}  // namespace mp
