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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "modpoly/grid.hpp"

namespace mp {

struct HeightBound {
  int ell = 0;
  long double B = 0;  // natural log scale, includes the log 2 slack
  mpz_class threshold;  // an integer >= e^B
};

HeightBound height_bound(int ell);

struct CheckReport {
  bool ok = true;
  std::string failed;  // name of the first violated predicate
  std::string detail;
};

CheckReport check_symmetric(const IntModPoly& phi);
CheckReport check_degree(const IntModPoly& phi);
CheckReport check_monic(const IntModPoly& phi);
// phi = (X^l - Y)(X - Y^l) mod l
CheckReport check_kronecker(const IntModPoly& phi);
// max log |a_ij| <= B - log 2
CheckReport check_height(const IntModPoly& phi);
// All of the above, in that order.
CheckReport check_identities(const IntModPoly& phi);

struct CrtConfig {
  uint64_t seed = 0;
  unsigned threads = 1;
  // primes are taken strictly above this value
  uint64_t primes_after = 0;
  std::function<void(const std::string&)> log;
};

struct SkippedPrime {
  uint64_t p;
  std::string reason;
};

struct CrtStats {
  HeightBound bound;
  std::vector<uint64_t> primes;
  std::vector<SkippedPrime> skipped;
  mpz_class modulus;
  double max_log_height = 0;
  double seconds = 0;
};

// Phi_l over Z. Every identity check runs before returning; a failure raises
// InternalInconsistency.
IntModPoly modular_polynomial(int ell, const CrtConfig& config, CrtStats* stats = nullptr);

// Phi_l mod m from the same per-prime residues by explicit CRT.
ModPolyModM modular_polynomial_mod_m(int ell, const mpz_class& m, const CrtConfig& config, CrtStats* stats = nullptr);

// The per-prime stage shared by both entry points: ascending suitable primes,
// skipping the recoverable failures, until their product exceeds the bound.
std::vector<ModPolyModP> collect_residues(int ell, const CrtConfig& config, CrtStats& stats);

// Signed integers from residues (Garner accumulation).
IntModPoly crt_reconstruct(int ell, const std::vector<ModPolyModP>& residues);
// Signed integers reduced mod m, without forming them.
ModPolyModM explicit_crt_mod(int ell, const std::vector<ModPolyModP>& residues, const mpz_class& m);

}  // namespace mp
