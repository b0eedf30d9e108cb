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

#include "surface/genus2.hpp"

namespace mp {

// Index standing for the point at infinity of a quintic model in a pairing.
inline constexpr int kInfinity = 5;

// Partition of {0..4, infinity} into three pairs, as indices into the roots.
using Pairing = std::array<std::array<int, 2>, 3>;

// Gluing E1 x E2 -> Jac(C) along the 2-torsion matching a_i <-> b_i, where
// E1: y^2 = prod (x - a_i) and E2: y^2 = prod (x - b_i). The Moebius map
// b = (1 - S a) / (R a + T) through the three pairs yields
//   C: y^2 = s1 prod (x^2 - at_i),  at_i = (a_i - s2) / s1,
// with pi1(x, y) = (s1 x^2 + s2, s1 y) and pi2(x, y) = (t2 + t1 / x^2, y / x^3).
template <class T>
struct Gluing {
  T s1, s2, t1, t2;
  std::array<T, 3> at;
};

template <class T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
Gluing<T> glue_params(const std::array<T, 3>& a, const std::array<T, 3>& b) {
  const T& like = a[0];
  std::array<std::array<T, 3>, 3> M;
  for (int i = 0; i < 3; ++i) M[i] = {a[i] * b[i], a[i], b[i]};
  T D = det3(M);
  if (!is_unit(D)) fail(Err::WouldSplit, "gluing: degenerate 2-torsion matching");
  T Di = inv(D);
  std::array<T, 3> sol;
  for (int c = 0; c < 3; ++c) {
    auto Mc = M;
    for (int i = 0; i < 3; ++i) Mc[i][c] = const_like(like, Fp2(1));
    sol[c] = det3(Mc) * Di;
  }
  const T &R = sol[0], &S = sol[1], &Tt = sol[2];
  if (!is_unit(R)) fail(Err::WouldSplit, "gluing: the 2-torsion matching comes from an isomorphism");
  Gluing<T> g;
  T Ri = inv(R);
  g.s2 = -(Tt * Ri);
  g.t2 = -(S * Ri);
  g.s1 = (g.t2 - b[0]) * (g.t2 - b[1]) * (g.t2 - b[2]);
  if (!is_unit(g.s1)) fail(Err::WouldSplit, "gluing: degenerate Moebius map");
  T s1i = inv(g.s1);
  g.t1 = (Ri + g.s2 * g.t2) * s1i;
  for (int i = 0; i < 3; ++i) g.at[i] = (a[i] - g.s2) * s1i;
  return g;
}

// Pullbacks of points of E1 and E2 to C, as divisors on the sextic model.
template <class T>
std::pair<Poly<T>, Poly<T>> glue_pullback1(const Gluing<T>& g, const Point<T>& P) {
  T s1i = inv(g.s1);
  return {Poly<T>({-((P.x - g.s2) * s1i), zero_like(P.x), const_like(P.x, Fp2(1))}), Poly<T>({P.y * s1i})};
}

template <class T>
std::pair<Poly<T>, Poly<T>> glue_pullback2(const Gluing<T>& g, const Point<T>& P) {
  T d = P.x - g.t2;
  if (!is_unit(d)) fail(Err::Degenerate, "gluing: point above x = 0");
  T c = g.t1 * inv(d);
  return {Poly<T>({-c, zero_like(P.x), const_like(P.x, Fp2(1))}), Poly<T>({zero_like(P.x), P.y * c})};
}

// The quadratics G_1, G_2, G_3 of a (2,2)-kernel on a quintic model; the pair
// containing infinity gives a linear factor and the leading coefficient goes
// into G_1, so that f = G_1 G_2 G_3.
template <class T>
std::array<Poly<T>, 3> pair_polys(const HyperellipticCurve<T>& C, const Pairing& pr) {
  std::array<Poly<T>, 3> G;
  for (int k = 0; k < 3; ++k) {
    int i = pr[k][0], j = pr[k][1];
    if (i == kInfinity) std::swap(i, j);
    G[k] = linear(C.roots.at(i));
    if (j != kInfinity) G[k] = G[k] * linear(C.roots.at(j));
  }
  G[0] = scale(G[0], C.lc);
  return G;
}

template <class T>
T richelot_delta(const std::array<Poly<T>, 3>& G) {
  const T& like = G[0].lead();
  std::array<std::array<T, 3>, 3> M;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) M[k][i] = G[k].coeff(static_cast<size_t>(i), like);
  }
  return det3(M);
}

// H_i = G_{i+1}' G_{i+2} - G_{i+1} G_{i+2}'. The codomain is
// delta y^2 = H_1 H_2 H_3.
template <class T>
std::array<Poly<T>, 3> richelot_duals(const std::array<Poly<T>, 3>& G) {
  std::array<Poly<T>, 3> H;
  for (int k = 0; k < 3; ++k) {
    const Poly<T>& A = G[(k + 1) % 3];
    const Poly<T>& B = G[(k + 2) % 3];
    H[k] = deriv(A) * B - A * deriv(B);
  }
  return H;
}

// Image of the point (x0, y0) under the Richelot correspondence: the points
// (u, w) of the codomain with G_1(x0) H_1(u) + G_2(x0) H_2(u) = 0 and
// y0 w = G_1(x0) H_1(u) (x0 - u). Returned as a sextic-model divisor.
template <class T>
std::pair<Poly<T>, Poly<T>> richelot_point_image(const std::array<Poly<T>, 3>& G, const std::array<Poly<T>, 3>& H,
                                                 const T& x0, const T& y0) {
  if (!is_unit(y0)) fail(Err::Degenerate, "Richelot image of a Weierstrass point");
  T g1 = eval(G[0], x0), g2 = eval(G[1], x0);
  Poly<T> u = scale(H[0], g1) + scale(H[1], g2);
  if (u.deg() != 2) fail(Err::Degenerate, "Richelot image meets infinity");
  u = make_monic(u);
  Poly<T> w = scale(H[0], g1 * inv(y0)) * Poly<T>({x0, -const_like(x0, Fp2(1))});
  return {u, w % u};
}

// Roots s, t of the Wronskian of G_1, G_2 when G_1, G_2, G_3 are linearly
// dependent: then G_i (s - t)^2 = A_i (x - s)^2 + B_i (x - t)^2 with
// A_i = G_i(t), B_i = G_i(s), and the codomain is the product of
//   y^2 = prod (A_i X + B_i)  and  y^2 = prod (A_i + B_i X).
template <class T>
Poly<T> split_wronskian(const std::array<Poly<T>, 3>& G) {
  return deriv(G[0]) * G[1] - G[0] * deriv(G[1]);
}

template <class T>
std::pair<Curve<T>, Curve<T>> split_factors(const std::array<Poly<T>, 3>& G, const T& s, const T& t) {
  const T& like = s;
  Poly<T> c1({const_like(like, Fp2(1))}), c2({const_like(like, Fp2(1))});
  for (int k = 0; k < 3; ++k) {
    T A = eval(G[k], t), B = eval(G[k], s);
    c1 = c1 * Poly<T>({B, A});
    c2 = c2 * Poly<T>({A, B});
  }
  auto model = [&](const Poly<T>& c) {
    if (c.deg() != 3) fail(Err::Degenerate, "split factor is not a cubic");
    return from_cubic(c.c[3], c.c[2], c.c[1], c.c[0]);
  };
  return {model(c1), model(c2)};
}

}  // namespace mp
