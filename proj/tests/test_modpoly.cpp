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

#include "doctest.h"
#include "oracle/oracle.hpp"

using namespace mp;

namespace {

Err code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Err::Ok;
}

}  // namespace

TEST_CASE("diamond parameters for the small primes") {
  struct Row {
    int ell, c, n;
    long long a, b;
  };
  for (Row r : {Row{3, 1, 2, 1, 0}, Row{5, 3, 4, 1, 0}, Row{7, 1, 3, 1, 0}, Row{11, 1, 4, 1, 1},
                Row{13, 3, 6, 3, 2}, Row{19, 1, 5, 3, 1}, Row{23, 1, 5, 3, 0}}) {
    DiamondParams d = find_diamond_parameters(r.ell);
    CHECK(d.c == r.c);
    CHECK(d.n == r.n);
    CHECK(d.a == r.a);
    CHECK(d.b == r.b);
  }
  CHECK(code_of([] { find_diamond_parameters(9); }) == Err::InvalidArgument);
  CHECK(code_of([] { find_diamond_parameters(2); }) == Err::InvalidArgument);
}

TEST_CASE("suitable primes") {
  CHECK(next_suitable_prime(find_diamond_parameters(7), 0) == 167);
  CHECK(next_suitable_prime(find_diamond_parameters(11), 0) == 1231);
  DiamondParams d3 = find_diamond_parameters(3);
  uint64_t p = next_suitable_prime(d3, 0);
  CHECK(p > 11);
  CHECK((p + 1) % 12 == 0);
  CHECK(next_suitable_prime(d3, p) > p);
}

TEST_CASE("eps re-expansion") {
  FieldScope fs(167);
  // Y - (j0 + eps) becomes Y - X
  RPoly f = linear(Artin(Fp2(kJ0), 4) + Artin::eps(4));
  std::vector<Fp2> g = substitute_epsilon(f, Fp2(kJ0));
  CHECK(g[0 * 2 + 1] == Fp2(1));
  CHECK(g[1 * 2 + 0] == Fp2(-1));
  CHECK(g[0] == Fp2(0));
  // eps^3 = (X - j0)^3
  RPoly h(std::vector<Artin>{Artin::eps(4, 3)});
  std::vector<Fp2> e3 = substitute_epsilon(h, Fp2(5));
  CHECK(e3[0] == Fp2(-125));
  CHECK(e3[1] == Fp2(75));
  CHECK(e3[2] == Fp2(-15));
  CHECK(e3[3] == Fp2(1));
}

TEST_CASE("direct lift reproduces the reference tables") {
  for (int ell : {3, 5, 7}) {
    ReferenceTable ref = load_reference(ell);
    DiamondParams d = find_diamond_parameters(ell);
    uint64_t p = next_suitable_prime(d, 0);
    CHECK(modp_direct(ell, p) == ref.phi.reduce(p));
  }
}

TEST_CASE("diamond pipeline, l = 7, p = 167") {
  DiamondParams d = find_diamond_parameters(7);
  ModpDiagnostics diag;
  ModPolyModP got = modular_polynomial_modp(7, 167, d, 0, &diag);
  std::vector<Artin> direct;
  ModPolyModP want = modp_direct(7, 167, 0, &direct);
  CHECK(got == want);
  CHECK(got == load_reference(7).phi.reduce(167));
  // deformations are unique: the lifted j's agree as a multiset
  FieldScope fs(167);
  for (const auto& j : diag.jk) CHECK(std::find(direct.begin(), direct.end(), j) != direct.end());
  // convergence certificate
  for (const auto& lr : diag.lifts) {
    for (size_t r = 0; r + 1 < lr.defect_valuations.size(); ++r) {
      CHECK(lr.defect_valuations[r] >= (r == 0 ? 0 : std::min<size_t>(size_t(1) << r, 9)));
    }
    CHECK(lr.defect_valuations.back() >= 9);
  }
}

TEST_CASE("small primes that must be skipped") {
  DiamondParams d = find_diamond_parameters(3);
  // p = 23: a vertex of some diamond has j = 1728; p = 47: a 3-isogenous curve has j = j(E0)
  CHECK(code_of([&] { modular_polynomial_modp(3, 23, d, 0); }) == Err::SkippedPrime);
  CHECK(code_of([&] { modular_polynomial_modp(3, 47, d, 0); }) == Err::SkippedPrime);
  CHECK(is_recoverable(Err::SkippedPrime));
  CHECK(!is_recoverable(Err::ConvergenceFailure));
  CHECK(code_of([&] { modular_polynomial_modp(3, 29, d, 0); }) == Err::InvalidArgument);
}

TEST_CASE("diamond pipeline against the tables, both branches") {
  // (l, p): l = 3 at its first usable prime, l = 5 and 13 exercise c = 3
  for (auto [ell, p] : {std::pair<int, uint64_t>{3, 71}, {5, 239}, {5, 479}, {13, 7487}}) {
    DiamondParams d = find_diamond_parameters(ell);
    ModpDiagnostics diag;
    CHECK(modular_polynomial_modp(ell, p, d, 0, &diag) == load_reference(ell).phi.reduce(p));
    if (d.c == 3) CHECK(diag.aux_choice >= 0);
  }
}

TEST_CASE("seed does not change the result") {
  DiamondParams d = find_diamond_parameters(7);
  ModPolyModP a = modular_polynomial_modp(7, 167, d, 1);
  CHECK(a == modular_polynomial_modp(7, 167, d, 99));
  CHECK(a == modp_direct(7, 167, 5));
}

TEST_CASE("secant probe choice is irrelevant") {
  DiamondParams d = find_diamond_parameters(7);
  FieldScope fs(167);
  Rng rng = pipeline_rng(3, 7, 167, 0);
  CurveF E = e0_curve();
  auto [Pl, Ql] = torsion_basis(E, 7, rng);
  auto [P2, Q2] = torsion_basis(E, 8, rng);
  DiamondSpec spec = make_diamond(d, E, Pl, std::nullopt);
  auto [K1, K2] = kani_kernel(spec, P2, Q2, rng);
  ChainRecord rec = compute_22_chain(spec.D1(), spec.Ekp(), K1, K2, d.n, rng);
  CurveR ER = curve_from_j_anchored(E, Artin(j_invariant(E), 9) + Artin::eps(9));
  Artin j1 = lift_isogeny_diamond(spec, rec, ER).jk;
  CHECK(lift_isogeny_diamond(spec, rec, ER, Fp2(3)).jk == j1);
  CHECK(lift_isogeny_diamond(spec, rec, ER, Fp2(Fp(5), Fp(11))).jk == j1);
  CHECK(code_of([&] { lift_isogeny_diamond(spec, rec, ER, Fp2(0)); }) == Err::InvalidArgument);
  // Velu over R gives the same deformation of E_k
  PointR PR = lift_point(E, Pl, ER, 7);
  CHECK(j_invariant(velu(ER, PR, 7).cod) == j1);
  // precision 1: the base j
  CurveR E1 = curve_from_j_anchored(E, Artin(j_invariant(E), 1));
  LiftResult r0 = lift_isogeny_diamond(spec, rec, E1);
  CHECK(r0.jk == Artin(j_invariant(spec.Ek()), 1));
  CHECK(r0.round_precisions.empty());
}

TEST_CASE("Kani kernel is rejected for a non-isotropic basis pairing") {
  DiamondParams d = find_diamond_parameters(7);
  FieldScope fs(167);
  Rng rng = pipeline_rng(4, 7, 167, 0);
  CurveF E = e0_curve();
  auto [Pl, Ql] = torsion_basis(E, 7, rng);
  auto [P2, Q2] = torsion_basis(E, 8, rng);
  DiamondSpec spec = make_diamond(d, E, Pl, std::nullopt);
  // the wrong dual on the first factor breaks isotropy
  DiamondParams wrong = d;
  wrong.b = 1;
  DiamondSpec bad = spec;
  bad.params = wrong;
  CHECK(code_of([&] { kani_kernel(bad, P2, Q2, rng); }) == Err::NotIsotropic);
  CHECK(code_of([&] { make_diamond(d, E, Pl, AuxLegs{}); }) == Err::InvalidArgument);
}
