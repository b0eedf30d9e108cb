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

#include "ellcurve/ellcurve.hpp"

namespace mp {

CurveR embed(const CurveF& E, size_t prec) {
  return {Artin(E.a2, prec), Artin(E.a4, prec), Artin(E.a6, prec)};
}

PointR embed(const PointF& P, size_t prec) {
  if (P.inf) return PointR::identity(Artin(prec));
  return {Artin(P.x, prec), Artin(P.y, prec), false};
}

CurveF reduce(const CurveR& E) { return {E.a2.residue(), E.a4.residue(), E.a6.residue()}; }

PointF reduce(const PointR& P) {
  if (P.inf) return PointF::identity(Fp2());
  return {P.x.residue(), P.y.residue(), false};
}

namespace {

void check_j(const Artin& j) {
  Fp2 j0 = j.residue();
  if (j0.is_zero() || j0 == Fp2(1728)) fail(Err::ExcludedJInvariant, "j-invariant 0 or 1728");
}

Artin a_of_j(const Artin& j) {
  return j * Fp2(27) * ((-j + Fp2(1728)) * Fp2(4)).inv();
}

}  // namespace

CurveR curve_from_j_deformation(const Artin& jtilde) {
  check_j(jtilde);
  Artin a = a_of_j(jtilde);
  return {Artin(jtilde.prec()), a, a};
}

CurveR curve_from_j_anchored(const CurveF& E, const Artin& jtilde) {
  check_j(jtilde);
  const size_t n = jtilde.prec();
  if (j_invariant(E) != jtilde.residue()) fail(Err::Structural, "anchored deformation: residue of j differs");
  Fp2 third = Fp2(3).inv();
  Fp2 A = E.a4 - E.a2 * E.a2 * third;
  Fp2 B = E.a6 - E.a2 * E.a4 * third + E.a2 * E.a2 * E.a2 * Fp2(2) * Fp2(27).inv();
  Fp2 c = B / A;
  Artin a = a_of_j(jtilde);
  Artin At = a * (c * c), Bt = a * (c * c * c);
  Artin a2(E.a2, n);
  Artin a4 = At + E.a2 * E.a2 * third;
  Artin a6 = Bt + At * (E.a2 * third) + E.a2 * E.a2 * E.a2 * Fp2(27).inv();
  return {a2, a4, a6};
}

PointF random_point(const CurveF& E, Rng& rng) {
  for (;;) {
    Fp2 x = random_fp2(rng);
    auto y = fp2_sqrt(E.rhs(x));
    if (!y) continue;
    if (rng() & 1) *y = -*y;
    return {x, *y, false};
  }
}

namespace {

// Value at S of the Miller function with divisor N(P) - N(O).
std::optional<Fp2> miller(const CurveF& E, const PointF& P, uint64_t N, const PointF& S) {
  Fp2 num(1), den(1);
  PointF T = P;
  int top = 63 - __builtin_clzll(N);
  auto step = [&](const PointF& A, const PointF& B) -> bool {
    // multiply by line(A,B)/vertical(A+B) evaluated at S
    if (A.inf || B.inf) return true;
    PointF C = add(E, A, B);
    Fp2 l;
    if (A.x == B.x && (A.y + B.y).is_zero()) {
      l = S.x - A.x;
      num *= l;
      return !l.is_zero();
    }
    Fp2 lam = (A == B) ? (A.x * A.x * Fp2(3) + E.a2 * A.x * Fp2(2) + E.a4) / (A.y * Fp2(2))
                       : (B.y - A.y) / (B.x - A.x);
    l = S.y - A.y - lam * (S.x - A.x);
    if (l.is_zero()) return false;
    num *= l;
    if (C.inf) return true;
    Fp2 v = S.x - C.x;
    if (v.is_zero()) return false;
    den *= v;
    return true;
  };
  for (int i = top - 1; i >= 0; --i) {
    num = num * num;
    den = den * den;
    if (!step(T, T)) return std::nullopt;
    T = add(E, T, T);
    if ((N >> i) & 1) {
      if (!step(T, P)) return std::nullopt;
      T = add(E, T, P);
    }
  }
  if (!T.inf) fail(Err::Structural, "weil_pairing: point is not N-torsion");
  return num / den;
}

}  // namespace

Fp2 weil_pairing(const CurveF& E, const PointF& P, const PointF& Q, uint64_t N, Rng& rng) {
  if (!mul(E, P, N).inf || !mul(E, Q, N).inf) fail(Err::Structural, "weil_pairing: inputs are not N-torsion");
  if (P.inf || Q.inf || N == 1) return Fp2(1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    PointF S = random_point(E, rng);
    PointF QS = add(E, Q, S), PS = sub(E, P, S), mS = neg(S);
    if (QS.inf || PS.inf) continue;
    auto a = miller(E, P, N, QS);
    auto b = miller(E, P, N, S);
    auto c = miller(E, Q, N, PS);
    auto d = miller(E, Q, N, mS);
    if (!a || !b || !c || !d) continue;
    return (*a * *d) / (*b * *c);
  }
  fail(Err::SamplingFailure, "weil_pairing: no auxiliary point found");
}

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> f;
  for (uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool has_exact_order(const CurveF& E, const PointF& P, uint64_t N) {
  if (!mul(E, P, N).inf) return false;
  for (uint64_t r : prime_factors(N)) {
    if (mul(E, P, N / r).inf) return false;
  }
  return true;
}

bool root_of_unity_exact_order(const Fp2& z, uint64_t N) {
  if (z.pow(N) != Fp2(1)) return false;
  for (uint64_t r : prime_factors(N)) {
    if (z.pow(N / r) == Fp2(1)) return false;
  }
  return true;
}

std::pair<PointF, PointF> torsion_basis(const CurveF& E, uint64_t N, Rng& rng, int budget) {
  const uint64_t p = Fp::p;
  if ((p + 1) % N != 0) fail(Err::InvalidArgument, "torsion_basis: N does not divide p+1");
  const uint64_t cof = (p + 1) / N;
  std::optional<PointF> P;
  for (int attempt = 0; attempt < budget; ++attempt) {
    PointF R = mul(E, random_point(E, rng), cof);
    if (!has_exact_order(E, R, N)) continue;
    if (!P) {
      P = R;
      continue;
    }
    if (root_of_unity_exact_order(weil_pairing(E, *P, R, N, rng), N)) return {*P, R};
  }
  fail(Err::SamplingFailure, "torsion_basis: budget exhausted for N = " + std::to_string(N));
}

PointR lift_point(const PointF& P, const CurveR& ER, const RPoly& psiN) {
  if (P.inf) return PointR::identity(ER.a2);
  const size_t n = ER.a2.prec();
  Artin x = newton_lift(P.x, psiN);
  // y from y^2 - f(x) = 0 around P.y
  RPoly g({-ER.rhs(x), Artin(n), Artin(Fp2(1), n)});
  Artin y = newton_lift(P.y, g);
  return {x, y, false};
}

PointR lift_point(const CurveF& E, const PointF& P, const CurveR& ER, int N) {
  if (N % static_cast<int64_t>(Fp::p) == 0) fail(Err::InseparableTorsion, "lift_point: p divides N");
  if (!(reduce(ER) == E)) fail(Err::Structural, "lift_point: deformation does not reduce to E");
  if (!mul(E, P, static_cast<Scalar>(N)).inf) fail(Err::Structural, "lift_point: P is not N-torsion");
  if (N % 2 == 0) fail(Err::InvalidArgument, "lift_point: N must be odd");
  return lift_point(P, ER, division_polynomial(ER, N));
}

CurveF e0_curve() { return {Fp2(6), Fp2(1), Fp2(0)}; }

namespace {

Fp2 sqrt_minus_one() {
  static thread_local uint64_t cached_p = 0;
  static thread_local Fp2 cached;
  if (cached_p != Fp::p) {
    auto r = fp2_sqrt(Fp2(-1));
    if (!r) fail(Err::Structural, "sqrt(-1) missing from F_{p^2}");
    cached = *r;
    cached_p = Fp::p;
  }
  return cached;
}

}  // namespace

PointF iota(const PointF& P) {
  if (P.inf || P.x.is_zero()) return PointF::identity(Fp2());
  // phi: E0 -> E1: Y^2 = X(X^2 - 12X + 32)
  Fp2 xi = P.x.inv();
  Fp2 X = P.y * P.y * xi * xi;
  Fp2 Y = P.y * (Fp2(1) - P.x * P.x) * xi * xi;
  // automorphism of order 4 on E1
  X = Fp2(8) - X;
  Y = Y * sqrt_minus_one();
  if (X.is_zero()) return PointF::identity(Fp2());
  // phihat: E1 -> E0, (X, Y) -> (Y^2 / (4 X^2), Y (32 - X^2) / (8 X^2))
  Fp2 Xi = X.inv();
  Fp2 x = Y * Y * Xi * Xi * Fp2(4).inv();
  Fp2 y = Y * (Fp2(32) - X * X) * Xi * Xi * Fp2(8).inv();
  return {x, y, false};
}

PointF gamma_map(const PointF& P, long long a, long long b) {
  CurveF E = e0_curve();
  return add(E, mul_signed(E, P, a), mul_signed(E, iota(P), b));
}

PointF gamma_dual(const PointF& P, long long a, long long b) { return gamma_map(P, a, -b); }

}  // namespace mp
