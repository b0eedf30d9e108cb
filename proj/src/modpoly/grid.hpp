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
#include <iosfwd>
#include <string>
#include <vector>

#include "modpoly/modpoly.hpp"
#include "ringarith/bigint.hpp"

namespace mp {

// Integer (l+2) x (l+2) coefficient grid; cell (i, j) is the coefficient of X^i Y^j.
struct IntModPoly {
  int ell = 0;
  std::vector<mpz_class> cells;

  IntModPoly() = default;
  explicit IntModPoly(int l) : ell(l), cells(static_cast<size_t>(l + 2) * static_cast<size_t>(l + 2)) {}

  size_t dim() const { return static_cast<size_t>(ell + 2); }
  mpz_class& at(size_t i, size_t j) { return cells[i * dim() + j]; }
  const mpz_class& at(size_t i, size_t j) const { return cells[i * dim() + j]; }
  bool operator==(const IntModPoly& o) const { return ell == o.ell && cells == o.cells; }

  ModPolyModP reduce(uint64_t p) const;
  // max log |a_ij| over the nonzero cells
  double max_log_height() const;
};

// Grid over Z/mZ with cells in [0, m).
struct ModPolyModM {
  int ell = 0;
  mpz_class m;
  std::vector<mpz_class> cells;

  size_t dim() const { return static_cast<size_t>(ell + 2); }
  const mpz_class& at(size_t i, size_t j) const { return cells[i * dim() + j]; }
  bool operator==(const ModPolyModM& o) const { return ell == o.ell && m == o.m && cells == o.cells; }
};

ModPolyModM reduce_mod(const IntModPoly& phi, const mpz_class& m);

// "i j c" per nonzero cell, ascending (i, j), LF endings.
void write_flat(std::ostream& out, const IntModPoly& phi);
void write_flat(std::ostream& out, const ModPolyModM& phi);
// The degree l + 1 is read off the largest exponent; throws ParseError.
IntModPoly read_flat(std::istream& in);

struct JsonMeta {
  uint64_t seed = 0;
  std::vector<uint64_t> primes;
  std::vector<uint64_t> skipped;
};

std::string to_json(const IntModPoly& phi, const JsonMeta& meta);
std::string to_json(const ModPolyModM& phi, const JsonMeta& meta);
IntModPoly int_from_json(const std::string& text);

std::string sha256_hex(const std::string& bytes);

}  // namespace mp
