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

#include <vector>

#include "ringarith/poly.hpp"

namespace mp {

using Scalar = unsigned __int128;

// y^2 = x^3 + a2 x^2 + a4 x + a6 over T (F_{p^2}, R, or F_{p^4}).
template <class T>
struct Curve {
  T a2, a4, a6;

  T rhs(const T& x) const { return ((x + a2) * x + a4) * x + a6; }
  bool operator==(const Curve& o) const { return a2 == o.a2 && a4 == o.a4 && a6 == o.a6; }
};

// Affine point with an explicit flag for the identity, which corresponds to
// the projective triple (0:1:0).
template <class T>
struct Point {
  T x, y;
  bool inf = false;

  static Point identity(const T& like) { return {zero_like(like), const_like(like, Fp2(1)), true}; }
  bool operator==(const Point& o) const {
    if (inf || o.inf) return inf == o.inf;
    return x == o.x && y == o.y;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

template <class T>
bool on_curve(const Curve<T>& E, const Point<T>& P) {
  return P.inf || (P.y * P.y - E.rhs(P.x)).is_zero();
}

template <class T>
Point<T> neg(const Point<T>& P) {
  if (P.inf) return P;
  return {P.x, -P.y, false};
}

template <class T>
Point<T> add(const Curve<T>& E, const Point<T>& P, const Point<T>& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  T lam;
  T dx = Q.x - P.x;
  if (dx.is_zero()) {
    if ((P.y + Q.y).is_zero()) return Point<T>::identity(P.x);
    if (!is_unit(P.y)) fail(Err::Degenerate, "doubling a point with non-unit y");
    T three = const_like(P.x, Fp2(3)), two = const_like(P.x, Fp2(2));
    lam = (three * P.x * P.x + two * E.a2 * P.x + E.a4) * inv(two * P.y);
  } else {
    if (!is_unit(dx)) fail(Err::Degenerate, "addition of points with equal residues");
    lam = (Q.y - P.y) * inv(dx);
  }
  T x3 = lam * lam - E.a2 - P.x - Q.x;
  T y3 = lam * (P.x - x3) - P.y;
  return {x3, y3, false};
}

template <class T>
Point<T> sub(const Curve<T>& E, const Point<T>& P, const Point<T>& Q) {
  return add(E, P, neg(Q));
}

template <class T>
Point<T> mul(const Curve<T>& E, const Point<T>& P, Scalar k) {
  Point<T> R = Point<T>::identity(P.x), A = P;
  while (k) {
    if (k & 1) R = add(E, R, A);
    k >>= 1;
    if (k) A = add(E, A, A);
  }
  return R;
}

template <class T>
Point<T> mul_signed(const Curve<T>& E, const Point<T>& P, long long k) {
  Point<T> R = mul(E, P, static_cast<Scalar>(k < 0 ? -k : k));
  return k < 0 ? neg(R) : R;
}

template <class T>
struct BInvariants {
  T b2, b4, b6, b8;
};

template <class T>
BInvariants<T> b_invariants(const Curve<T>& E) {
  BInvariants<T> b;
  b.b2 = E.a2 * Fp2(4);
  b.b4 = E.a4 * Fp2(2);
  b.b6 = E.a6 * Fp2(4);
  b.b8 = E.a2 * E.a6 * Fp2(4) - E.a4 * E.a4;
  return b;
}

template <class T>
T discriminant(const Curve<T>& E) {
  auto b = b_invariants(E);
  return -(b.b2 * b.b2 * b.b8) - b.b4 * b.b4 * b.b4 * Fp2(8) - b.b6 * b.b6 * Fp2(27) +
         b.b2 * b.b4 * b.b6 * Fp2(9);
}

template <class T>
T j_invariant(const Curve<T>& E) {
  auto b = b_invariants(E);
  T c4 = b.b2 * b.b2 - b.b4 * Fp2(24);
  T d = discriminant(E);
  if (!is_unit(d)) fail(Err::Structural, "singular curve");
  return c4 * c4 * c4 * inv(d);
}

// Model of y^2 = a x^3 + b x^2 + c x + d after x -> x / a, y -> y / a.
template <class T>
Curve<T> from_cubic(const T& a, const T& b, const T& c, const T& d) {
  return {b, a * c, a * a * d};
}

// N-division polynomial as a polynomial in x: psi_N for odd N and
// psi_N * psi_2 for even N, so that the roots are exactly the x-coordinates
// of the nonzero N-torsion points.
template <class T>
Poly<T> division_polynomial(const Curve<T>& E, int N) {
  if (N < 1) fail(Err::InvalidArgument, "division polynomial index must be positive");
  const T& like = E.a2;
  auto b = b_invariants(E);
  auto C = [&](int64_t v) { return const_like(like, Fp2(v)); };
  // g_n with psi_n = g_n (n odd) and psi_n = psi_2 g_n (n even); F = psi_2^2.
  Poly<T> F({b.b6, b.b4 * Fp2(2), b.b2, C(4)});
  Poly<T> F2 = F * F;
  std::vector<Poly<T>> g(std::max(N + 3, 5));
  g[0] = Poly<T>();
  g[1] = Poly<T>({C(1)});
  g[2] = Poly<T>({C(1)});
  g[3] = Poly<T>({b.b8, b.b6 * Fp2(3), b.b4 * Fp2(3), b.b2, C(3)});
  g[4] = Poly<T>({b.b4 * b.b8 - b.b6 * b.b6, b.b2 * b.b8 - b.b4 * b.b6, b.b8 * Fp2(10), b.b6 * Fp2(10),
                  b.b4 * Fp2(5), b.b2, C(2)});
  for (int n = 5; n <= N; ++n) {
    int m = n / 2;
    if (n % 2) {
      Poly<T> t1 = g[m + 2] * g[m] * g[m] * g[m];
      Poly<T> t2 = g[m - 1] * g[m + 1] * g[m + 1] * g[m + 1];
      g[n] = (m % 2 == 0) ? F2 * t1 - t2 : t1 - F2 * t2;
    } else {
      g[n] = g[m] * (g[m + 2] * g[m - 1] * g[m - 1] - g[m - 2] * g[m + 1] * g[m + 1]);
    }
  }
  if (N % 2) return g[N];
  return g[N] * F;
}

// Separable isogeny of odd prime degree d with kernel <K>, by Velu's formulas.
// The record keeps the kernel half-set needed to evaluate the map.
template <class T>
struct Isogeny {
  Curve<T> dom, cod;
  int degree = 1;
  Point<T> kernel;
  std::vector<T> xq, uq, vq;

  Point<T> operator()(const Point<T>& P) const {
    if (P.inf) return P;
    T X = P.x, S = zero_like(P.x);
    for (size_t i = 0; i < xq.size(); ++i) {
      T dx = P.x - xq[i];
      if (dx.is_zero()) return Point<T>::identity(P.x);
      if (!is_unit(dx)) fail(Err::Degenerate, "isogeny evaluated next to a kernel point");
      T id = inv(dx), id2 = id * id;
      X = X + vq[i] * id + uq[i] * id2;
      S = S + (uq[i] * id * Fp2(2) + vq[i]) * id2;
    }
    return {X, P.y - P.y * S, false};
  }
};

template <class T>
Isogeny<T> velu(const Curve<T>& E, const Point<T>& K, int d) {
  if (d < 3 || d % 2 == 0) fail(Err::InvalidArgument, "velu: degree must be an odd prime");
  if (K.inf) fail(Err::Structural, "velu: trivial kernel");
  Isogeny<T> phi;
  phi.dom = E;
  phi.degree = d;
  phi.kernel = K;
  T v = zero_like(E.a2), w = zero_like(E.a2);
  Point<T> Q = K;
  for (int i = 1; i <= (d - 1) / 2; ++i) {
    if (Q.inf) fail(Err::Structural, "velu: kernel point has smaller order");
    T gx = Q.x * Q.x * Fp2(3) + E.a2 * Q.x * Fp2(2) + E.a4;
    T vQ = gx * Fp2(2);
    T uQ = Q.y * Q.y * Fp2(4);
    phi.xq.push_back(Q.x);
    phi.vq.push_back(vQ);
    phi.uq.push_back(uQ);
    v = v + vQ;
    w = w + uQ + Q.x * vQ;
    Q = add(E, Q, K);
  }
  // after (d-1)/2 steps Q = ((d+1)/2) K = -((d-1)/2) K
  if (Q.inf || !(Q.x == phi.xq.back())) fail(Err::Structural, "velu: kernel point does not have the stated order");
  phi.cod = {E.a2, E.a4 - v * Fp2(5), E.a6 - E.a2 * v * Fp2(4) - w * Fp2(7)};
  return phi;
}

}  // namespace mp
