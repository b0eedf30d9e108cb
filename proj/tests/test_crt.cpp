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

#include <cmath>
#include <sstream>

#include "crt/crt.hpp"
#include "doctest.h"
#include "oracle/oracle.hpp"

using namespace mp;

namespace {

double log_mpz(const mpz_class& x) {
  signed long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

TEST_CASE("height bound") {
  HeightBound h3 = height_bound(3);
  CHECK(static_cast<double>(h3.B) == doctest::Approx(18 * std::log(3.0) + 54 + std::log(2.0)).epsilon(1e-12));
  CHECK(static_cast<double>(h3.B) == doctest::Approx(74.4682).epsilon(1e-5));
  double prev = 0;
  for (int l = 3; l < 100; l += 2) {
    if (!is_odd_prime(l)) continue;
    HeightBound h = height_bound(l);
    const double L = l, lg = std::log(L);
    const double branch = std::min(2 * L, 14 * std::sqrt(L) * lg);
    CHECK(static_cast<double>(h.B) == doctest::Approx(6 * L * lg + 16 * L + branch + std::log(2.0)).epsilon(1e-12));
    CHECK(static_cast<double>(h.B) > prev);
    prev = static_cast<double>(h.B);
    // the threshold rounds up, by a tiny relative margin only
    CHECK(log_mpz(h.threshold) >= static_cast<double>(h.B));
    CHECK(log_mpz(h.threshold) - static_cast<double>(h.B) < 1e-9);
  }
  // the second branch takes over from l = 3190 on: 3191 is prime
  auto rest = [](int l) {
    const long double L = l;
    return static_cast<double>(height_bound(l).B - 6 * L * std::log(L) - 16 * L - std::log(2.0L));
  };
  CHECK(rest(3) == doctest::Approx(6.0));
  CHECK(rest(3187) == doctest::Approx(2 * 3187.0));
  CHECK(rest(3191) == doctest::Approx(14 * std::sqrt(3191.0) * std::log(3191.0)));
  CHECK(rest(3191) < 2 * 3191.0);
}

TEST_CASE("classical identity checks") {
  IntModPoly phi = load_reference(3).phi;
  CHECK(check_identities(phi).ok);
  CHECK(phi.at(4, 0) == 1);
  IntModPoly s = phi;
  s.at(1, 0) += 1;
  CHECK(check_identities(s).failed == "symmetry");
  IntModPoly m = phi;
  m.at(4, 0) = 2;
  m.at(0, 4) = 2;
  CHECK(check_identities(m).failed == "monic");
  IntModPoly k = phi;
  k.at(2, 1) += 1;
  k.at(1, 2) += 1;
  CHECK(check_identities(k).failed == "kronecker");
  IntModPoly h = phi;
  h.at(2, 1) += mpz_class(3) << 120;
  h.at(1, 2) += mpz_class(3) << 120;
  CHECK(check_identities(h).failed == "height");
  IntModPoly d = phi;
  d.at(4, 1) = 3;
  d.at(1, 4) = 3;
  CHECK(check_identities(d).failed == "degree");
}

TEST_CASE("Phi_3 over Z") {
  CrtConfig cfg;
  CrtStats st;
  IntModPoly phi = modular_polynomial(3, cfg, &st);
  CHECK(phi == load_reference(3).phi);
  CHECK(st.modulus > st.bound.threshold);
  CHECK(!st.skipped.empty());
  CHECK(st.max_log_height <= static_cast<double>(st.bound.B) - std::log(2.0));
  // primes are ascending and skipped ones are not used
  for (size_t i = 1; i < st.primes.size(); ++i) CHECK(st.primes[i] > st.primes[i - 1]);
  for (const auto& s : st.skipped) CHECK(std::find(st.primes.begin(), st.primes.end(), s.p) == st.primes.end());
}

TEST_CASE("thread count and prime set do not change the output") {
  CrtConfig one, many, later;
  many.threads = 3;
  later.primes_after = 5000;
  CrtStats a, b, c;
  IntModPoly p1 = modular_polynomial(5, one, &a);
  CHECK(p1 == modular_polynomial(5, many, &b));
  CHECK(a.primes == b.primes);
  CHECK(p1 == modular_polynomial(5, later, &c));
  CHECK(c.primes.front() > 5000);
  CHECK(p1 == load_reference(5).phi);
}

TEST_CASE("Phi_7 agrees with CRT over the direct lift") {
  CrtConfig cfg;
  CrtStats st;
  IntModPoly phi = modular_polynomial(7, cfg, &st);
  std::vector<ModPolyModP> direct;
  for (uint64_t p : st.primes) direct.push_back(modp_direct(7, p));
  CHECK(crt_reconstruct(7, direct) == phi);
}

TEST_CASE("mod m reduction") {
  CrtConfig cfg;
  IntModPoly phi3 = load_reference(3).phi;
  for (const char* m : {"2", "101", "1000000007", "340282366920938463463374607431768211507"}) {
    mpz_class M(m);
    CHECK(modular_polynomial_mod_m(3, M, cfg) == reduce_mod(phi3, M));
  }
  // m = the product of the primes used gives the unsigned CRT grid
  CrtStats st;
  std::vector<ModPolyModP> res = collect_residues(3, cfg, st);
  ModPolyModM full = explicit_crt_mod(3, res, st.modulus);
  CHECK(full == reduce_mod(crt_reconstruct(3, res), st.modulus));
  CHECK_THROWS(modular_polynomial_mod_m(3, mpz_class(1), cfg));
}

TEST_CASE("flat and json round trips") {
  IntModPoly phi = load_reference(5).phi;
  std::ostringstream flat;
  write_flat(flat, phi);
  std::istringstream in(flat.str());
  CHECK(read_flat(in) == phi);
  CHECK(flat.str().find('\r') == std::string::npos);
  CHECK(flat.str().find(" \n") == std::string::npos);
  // byte-identical to the pinned file
  CHECK(sha256_hex(flat.str()) == load_reference(5).sha256);
  JsonMeta meta{7, {23, 47}, {11}};
  CHECK(int_from_json(to_json(phi, meta)) == phi);
  ModPolyModM m = reduce_mod(phi, mpz_class(101));
  std::ostringstream mf;
  write_flat(mf, m);
  CHECK(mf.str().find("6 0 1\n") != std::string::npos);
  CHECK_THROWS_AS(int_from_json(to_json(m, meta)), Error);
}

TEST_CASE("malformed grids") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    try {
      read_flat(in);
    } catch (const Error& e) {
      return e.code();
    }
    return Err::Ok;
  };
  CHECK(parse("") == Err::ParseError);
  CHECK(parse("hello world\n") == Err::ParseError);
  CHECK(parse("0 1 2 3\n") == Err::ParseError);
  CHECK(parse("0 x 2\n") == Err::ParseError);
  CHECK(parse("4 0 1\n4 0 1\n") == Err::ParseError);
  CHECK(parse("4 0 1\n0 4 1\n") == Err::Ok);
  CHECK_THROWS_AS(int_from_json("[1,2]"), Error);
  CHECK_THROWS_AS(int_from_json("{"), Error);
}
