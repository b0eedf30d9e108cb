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

#include <algorithm>

#include "doctest.h"
#include "surface/chain.hpp"

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

HyperellipticCurve<Fp2> random_quintic(Rng& rng) {
  HyperellipticCurve<Fp2> C{random_fp2(rng), {}};
  while (C.roots.size() < 5) {
    Fp2 r = random_fp2(rng);
    if (std::find(C.roots.begin(), C.roots.end(), r) == C.roots.end()) C.roots.push_back(r);
  }
  return C;
}

// Random point (x, y) on y^2 = f(x) over F_{p^2}.
std::pair<Fp2, Fp2> random_hyp_point(const Poly<Fp2>& f, Rng& rng) {
  for (;;) {
    Fp2 x = random_fp2(rng);
    auto y = fp2_sqrt(eval(f, x));
    if (y && !y->is_zero()) return {x, *y};
  }
}

Divisor<Fp2> random_divisor(const Poly<Fp2>& f, Rng& rng) {
  auto [x1, y1] = random_hyp_point(f, rng);
  auto [x2, y2] = random_hyp_point(f, rng);
  Divisor<Fp2> a{linear(x1), Poly<Fp2>({y1})}, b{linear(x2), Poly<Fp2>({y2})};
  return cantor_add(f, a, b);
}

// Kernel of the (2^n, 2^n)-isogeny attached to the (l, 2^n - l) diamond with
// gamma = [1] when 2^n - l = 1: the graph of an l-isogeny on E[2^n].
struct GraphDiamond {
  CurveF E, Ek;
  PointF kernel;
  ProductPoint K1, K2;
};

GraphDiamond graph_diamond(int l, int n, Rng& rng) {
  GraphDiamond d;
  d.E = e0_curve();
  auto [P, Q] = torsion_basis(d.E, static_cast<uint64_t>(l), rng);
  auto phi = velu(d.E, P, l);
  d.Ek = phi.cod;
  d.kernel = P;
  auto [A, B] = torsion_basis(d.E, uint64_t(1) << n, rng);
  d.K1 = {A, phi(A)};
  d.K2 = {B, phi(B)};
  return d;
}

}  // namespace

TEST_CASE("division-free determinant") {
  FieldScope f(10007);
  Rng rng(1);
  for (size_t n : {1, 2, 3, 4, 7}) {
    std::vector<std::vector<Fp2>> A(n, std::vector<Fp2>(n));
    for (auto& row : A) {
      for (auto& x : row) x = random_fp2(rng);
    }
    // Gaussian elimination reference
    auto M = A;
    Fp2 det(1);
    for (size_t c = 0; c < n; ++c) {
      size_t piv = c;
      while (piv < n && M[piv][c].is_zero()) ++piv;
      REQUIRE(piv < n);
      if (piv != c) {
        std::swap(M[piv], M[c]);
        det = -det;
      }
      det *= M[c][c];
      for (size_t r = c + 1; r < n; ++r) {
        Fp2 q = M[r][c] / M[c][c];
        for (size_t k = c; k < n; ++k) M[r][k] -= q * M[c][k];
      }
    }
    CHECK(det_division_free(A, Fp2()) == det);
  }
}

TEST_CASE("chi10 examples") {
  FieldScope f(167);
  Poly<Fp2> q = linear(Fp2(0)) * linear(Fp2(1)) * linear(Fp2(2)) * linear(Fp2(3)) * linear(Fp2(4));
  // prod_{i<j} (i - j)^2 over the roots 0..4
  Fp2 disc(1);
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) disc *= Fp2(i - j) * Fp2(i - j);
  }
  CHECK(chi10(q) == -(disc / Fp2(4096)));
  Poly<Fp2> rep = linear(Fp2(1)) * linear(Fp2(1)) * linear(Fp2(5)) * linear(Fp2(7)) * linear(Fp2(9));
  CHECK(chi10(rep).is_zero());
  SurfaceState<Fp2> prod{std::pair<CurveF, CurveF>{e0_curve(), e0_curve()}};
  CHECK(chi10(prod, Fp2()).is_zero());
  // sextic with lc: lc^10 prod (r_i - r_j)^2
  Rng rng(2);
  HyperellipticCurve<Fp2> C = random_quintic(rng);
  C.roots.push_back(Fp2(77));
  Fp2 want = C.lc.pow(10);
  for (size_t i = 0; i < 6; ++i) {
    for (size_t j = i + 1; j < 6; ++j) want *= (C.roots[i] - C.roots[j]) * (C.roots[i] - C.roots[j]);
  }
  CHECK(discriminant(C.poly()) == want);
  // over R the same formula is computed without divisions
  Poly<Fp2> g = C.poly();
  RPoly gr = embed(g, 4);
  CHECK(discriminant(gr) == Artin(discriminant(g), 4));
}

TEST_CASE("Cantor arithmetic on a quintic") {
  FieldScope fs(1231);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    auto C = random_quintic(rng);
    Poly<Fp2> f = C.poly();
    Divisor<Fp2> a = random_divisor(f, rng), b = random_divisor(f, rng), c = random_divisor(f, rng);
    CHECK(on_curve(f, a));
    CHECK(on_curve(f, cantor_add(f, a, b)));
    CHECK(cantor_add(f, cantor_add(f, a, b), c) == cantor_add(f, a, cantor_add(f, b, c)));
    CHECK(cantor_add(f, a, cantor_neg(a)).is_zero());
    CHECK(cantor_mul(f, a, 3) == cantor_add(f, a, cantor_add(f, a, a)));
    // Weierstrass points are 2-torsion
    Divisor<Fp2> w{linear(C.roots[0]) * linear(C.roots[1]), Poly<Fp2>()};
    CHECK(cantor_add(f, w, w).is_zero());
  }
}

TEST_CASE("moving a Weierstrass point to infinity") {
  FieldScope fs(1231);
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    auto C = random_quintic(rng);
    C.roots.push_back(random_fp2(rng));
    Poly<Fp2> h = C.poly();
    size_t rho = rng() % 6;
    auto Q = to_quintic(C, rho);
    Poly<Fp2> f = Q.poly();
    CHECK(f.deg() == 5);
    auto [x1, y1] = random_hyp_point(h, rng);
    auto [x2, y2] = random_hyp_point(h, rng);
    if (x1 == x2) continue;
    Poly<Fp2> u = linear(x1) * linear(x2);
    Poly<Fp2> v({y1 - x1 * (y2 - y1) / (x2 - x1), (y2 - y1) / (x2 - x1)});
    Divisor<Fp2> D = sextic_divisor_to_quintic(u, v, C.roots[rho]);
    CHECK(on_curve(f, D));
  }
}

TEST_CASE("gluing pullbacks lie on the glued curve") {
  FieldScope fs(167);
  Rng rng(5);
  GraphDiamond d = graph_diamond(7, 3, rng);
  auto T1 = ProductPoint{mul(d.E, d.K1.a, 4), mul(d.Ek, d.K1.b, 4)};
  auto T2 = ProductPoint{mul(d.E, d.K2.a, 4), mul(d.Ek, d.K2.b, 4)};
  std::array<Fp2, 3> a = {T1.a.x, T2.a.x, add(d.E, T1.a, T2.a).x};
  std::array<Fp2, 3> b = {T1.b.x, T2.b.x, add(d.Ek, T1.b, T2.b).x};
  auto g = glue_params(a, b);
  Poly<Fp2> h({g.s1});
  for (int i = 0; i < 3; ++i) h = h * Poly<Fp2>({-g.at[i], Fp2(), Fp2(1)});
  for (int t = 0; t < 10; ++t) {
    PointF P = random_point(d.E, rng), R = random_point(d.Ek, rng);
    auto [u1, v1] = glue_pullback1(g, P);
    auto [u2, v2] = glue_pullback2(g, R);
    CHECK((h - v1 * v1) % u1 == Poly<Fp2>());
    CHECK((h - v2 * v2) % u2 == Poly<Fp2>());
  }
  // matching the 2-torsion through an isomorphism does not glue
  CHECK(code_of([&] { (void)glue_params(a, a); }) == Err::WouldSplit);
}

TEST_CASE("Richelot correspondence lands on delta y^2 = H1 H2 H3") {
  FieldScope fs(1231);
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    auto C = random_quintic(rng);
    Poly<Fp2> f = C.poly();
    Pairing pr = {{{0, 3}, {1, kInfinity}, {2, 4}}};
    auto G = pair_polys(C, pr);
    CHECK(G[0] * G[1] * G[2] == f);
    Fp2 delta = richelot_delta(G);
    auto H = richelot_duals(G);
    Poly<Fp2> hn = scale(H[0] * H[1] * H[2], delta.inv());
    auto [x, y] = random_hyp_point(f, rng);
    auto [u, w] = richelot_point_image(G, H, x, y);
    CHECK((hn - w * w) % u == Poly<Fp2>());
  }
}

TEST_CASE("chains of graph diamonds split into E x E_k") {
  for (auto [l, n, p] : {std::tuple{7, 3, 167ull}, std::tuple{3, 2, 23ull}, std::tuple{7, 3, 3583ull}}) {
    FieldScope fs(p);
    Rng rng(7 + p);
    for (int t = 0; t < 4; ++t) {
      GraphDiamond d = graph_diamond(l, n, rng);
      ChainRecord rec = compute_22_chain(d.E, d.Ek, d.K1, d.K2, n, rng);
      CHECK(rec.kinds().size() == static_cast<size_t>(n));
      CHECK(rec.kinds().front() == "glue");
      CHECK(rec.kinds().back() == "split");
      std::vector<Fp2> got = {j_invariant(rec.F1), j_invariant(rec.F2)};
      std::vector<Fp2> want = {j_invariant(d.E), j_invariant(d.Ek)};
      CHECK(std::is_permutation(got.begin(), got.end(), want.begin()));
      CHECK(richelot_delta(replay_base(rec)).is_zero());
    }
  }
}

TEST_CASE("chain replay over R") {
  FieldScope fs(167);
  Rng rng(8);
  GraphDiamond d = graph_diamond(7, 3, rng);
  ChainRecord rec = compute_22_chain(d.E, d.Ek, d.K1, d.K2, 3, rng);
  const size_t prec = 9;
  // trivial deformation
  ChainReplay triv = lift_22_chain(rec, embed(d.E, prec), embed(d.Ek, prec));
  CHECK(triv.defect.is_zero());
  CHECK(lift_22_chain(rec, embed(d.E, prec), embed(d.Ek, prec)).defect == triv.defect);
  // the deformation of E_k through the lifted 7-isogeny makes the chain split
  Artin j(Fp2(287496), prec);
  j[1] = Fp2(1);
  CurveR ER = curve_from_j_anchored(d.E, j);
  Artin jk = j_invariant(velu(ER, lift_point(d.E, d.kernel, ER, 7), 7).cod);
  ChainReplay good = lift_22_chain(rec, ER, curve_from_j_anchored(d.Ek, jk));
  CHECK(good.defect.is_zero());
  auto [F1, F2] = split_22(rec, good);
  std::vector<Artin> got = {j_invariant(F1), j_invariant(F2)};
  CHECK(std::find(got.begin(), got.end(), jk) != got.end());
  // perturbing j_k at order eps^k leaves a defect of valuation exactly k
  for (size_t k = 1; k < prec; ++k) {
    Artin jw = jk + Artin::eps(prec, k);
    ChainReplay bad = lift_22_chain(rec, ER, curve_from_j_anchored(d.Ek, jw));
    CHECK(bad.defect.valuation() == k);
  }
}
