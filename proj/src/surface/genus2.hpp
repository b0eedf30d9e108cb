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

#include <array>
#include <vector>

#include "ellcurve/ellcurve.hpp"

namespace mp {

// Genus-2 curve y^2 = lc * prod (x - r_i) with all Weierstrass points known.
// Five roots: imaginary (quintic) model, one point at infinity.
// Six roots: sextic model, two points at infinity.
template <class T>
struct HyperellipticCurve {
  T lc;
  std::vector<T> roots;

  Poly<T> poly() const {
    std::vector<Poly<T>> f;
    for (const auto& r : roots) f.push_back(linear(r));
    return scale(product_tree(f), lc);
  }
};

// Reduced Mumford pair (u, v) on a quintic model: u monic of degree <= 2,
// deg v < deg u, u | f - v^2. The class is D - deg(u) * infinity.
template <class T>
struct Divisor {
  Poly<T> u, v;

  static Divisor zero(const T& like) { return {Poly<T>({const_like(like, Fp2(1))}), Poly<T>()}; }
  bool is_zero() const { return u.deg() == 0; }
  bool operator==(const Divisor& o) const { return u.c == o.u.c && v.c == o.v.c; }
};

template <class T>
bool on_curve(const Poly<T>& f, const Divisor<T>& D) {
  return (f - D.v * D.v) % D.u == Poly<T>() && D.v.deg() < D.u.deg();
}

template <class T>
Divisor<T> cantor_add(const Poly<T>& f, const Divisor<T>& a, const Divisor<T>& b) {
  const T like = f.lead();
  Poly<T> d1, e1, e2;
  xgcd(a.u, b.u, d1, e1, e2, like);
  Poly<T> d, c1, c2;
  xgcd(d1, a.v + b.v, d, c1, c2, like);
  Poly<T> s1 = c1 * e1, s2 = c1 * e2;
  Poly<T> u = (a.u * b.u) / (d * d);
  Poly<T> v = ((s1 * a.u * b.v + s2 * b.u * a.v + c2 * (a.v * b.v + f)) / d) % u;
  while (u.deg() > 2) {
    Poly<T> u2 = (f - v * v) / u;
    v = (-v) % u2;
    u = std::move(u2);
  }
  u = make_monic(u);
  v = v % u;
  return {u, v};
}

template <class T>
Divisor<T> cantor_neg(const Divisor<T>& a) {
  return {a.u, -a.v};
}

template <class T>
Divisor<T> cantor_mul(const Poly<T>& f, const Divisor<T>& a, uint64_t k) {
  Divisor<T> r = Divisor<T>::zero(f.lead()), x = a;
  while (k) {
    if (k & 1) r = cantor_add(f, r, x);
    k >>= 1;
    if (k) x = cantor_add(f, x, x);
  }
  return r;
}

// Moves the Weierstrass point x = rho of a sextic model to infinity through
// x = rho + 1/z, y = Y / z^3. The result is a quintic model.
template <class T>
HyperellipticCurve<T> to_quintic(const HyperellipticCurve<T>& C, size_t rho) {
  HyperellipticCurve<T> Q;
  const T& r0 = C.roots.at(rho);
  Q.lc = C.lc;
  for (size_t i = 0; i < C.roots.size(); ++i) {
    if (i == rho) continue;
    T d = C.roots[i] - r0;
    if (!is_unit(d)) fail(Err::Degenerate, "to_quintic: repeated Weierstrass point");
    Q.roots.push_back(inv(d));
    Q.lc = Q.lc * (-d);
  }
  return Q;
}

// A degree-2 divisor on the sextic model, given by (u, v) with u monic, mapped
// to the quintic model of to_quintic. The divisor classes D - D_inf and
// D - 2 (rho, 0) agree since x - rho has divisor 2 (rho, 0) - D_inf.
template <class T>
Divisor<T> sextic_divisor_to_quintic(const Poly<T>& u, const Poly<T>& v, const T& rho) {
  if (u.deg() != 2) fail(Err::Degenerate, "sextic divisor of degree " + std::to_string(u.deg()));
  T ur = eval(u, rho);
  if (!is_unit(ur)) fail(Err::Degenerate, "divisor meets the moved Weierstrass point");
  T uri = inv(ur);
  T u1 = u.c[1];
  T two = const_like(rho, Fp2(2));
  Poly<T> U({uri, (two * rho + u1) * uri, const_like(rho, Fp2(1))});
  T v1 = v.coeff(1, rho), v0 = v.coeff(0, rho);
  Poly<T> W({zero_like(rho), zero_like(rho), v1, v1 * rho + v0});
  return {U, W % U};
}

// Determinant of a square matrix without divisions (Berkowitz), valid over R.
template <class T>
T det_division_free(const std::vector<std::vector<T>>& A, const T& like) {
  const size_t n = A.size();
  if (n == 0) return const_like(like, Fp2(1));
  // characteristic polynomial coefficients, built up one leading block at a time
  std::vector<T> c = {const_like(like, Fp2(1)), -A[0][0]};
  for (size_t k = 1; k < n; ++k) {
    // R = row k (cols < k), C = col k (rows < k), S = leading k x k block
    std::vector<T> Rrow(A[k].begin(), A[k].begin() + k), Ccol(k, zero_like(like));
    for (size_t i = 0; i < k; ++i) Ccol[i] = A[i][k];
    std::vector<T> toe(k + 2, zero_like(like));
    toe[0] = const_like(like, Fp2(1));
    toe[1] = -A[k][k];
    std::vector<T> X = Ccol;
    for (size_t m = 2; m <= k + 1; ++m) {
      T s = zero_like(like);
      for (size_t i = 0; i < k; ++i) s = s + Rrow[i] * X[i];
      toe[m] = -s;
      std::vector<T> Y(k, zero_like(like));
      for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) Y[i] = Y[i] + A[i][j] * X[j];
      }
      X = std::move(Y);
    }
    std::vector<T> nc(k + 2, zero_like(like));
    for (size_t i = 0; i < k + 2; ++i) {
      for (size_t j = 0; j <= i && j < c.size(); ++j) nc[i] = nc[i] + toe[i - j] * c[j];
    }
    c = std::move(nc);
  }
  T d = c[n];
  return (n % 2) ? -d : d;
}

// Discriminant lc^(2n-2) prod_{i<j} (r_i - r_j)^2 of a polynomial of degree
// n, computed from the Sylvester matrix of f and f'.
template <class T>
T discriminant(const Poly<T>& f) {
  const int n = f.deg();
  if (n < 1) fail(Err::InvalidArgument, "discriminant of a constant");
  const T& like = f.lead();
  Poly<T> g = deriv(f);
  const int m = n - 1;
  const size_t N = static_cast<size_t>(n + m);
  std::vector<std::vector<T>> S(N, std::vector<T>(N, zero_like(like)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) S[i][i + j] = f.c[n - j];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) S[m + i][i + j] = g.coeff(static_cast<size_t>(m - j), like);
  }
  T res = det_division_free(S, like);
  // disc = (-1)^(n(n-1)/2) res(f, f') / lc
  T d = res * inv(f.lead());
  return ((n * (n - 1) / 2) % 2) ? -d : d;
}

}  // namespace mp
