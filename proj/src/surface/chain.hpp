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

#include <string>
#include <variant>

#include "surface/richelot.hpp"

namespace mp {

struct ProductPoint {
  PointF a, b;
};

// Principally polarised surface: a genus-2 Jacobian given by its curve
// equation, or a product of two elliptic curves.
template <class T>
struct SurfaceState {
  std::variant<HyperellipticCurve<T>, std::pair<Curve<T>, Curve<T>>> v;

  bool is_product() const { return v.index() == 1; }
};

// chi_10 = -2^-12 disc(f) on Jacobians, 0 on products.
template <class T>
T chi10(const Poly<T>& f) {
  T d = discriminant(f);
  return -(d * Fp2(4096).inv());
}

template <class T>
T chi10(const SurfaceState<T>& A, const T& like) {
  if (A.is_product()) return zero_like(like);
  return chi10(std::get<0>(A.v).poly());
}

// One Richelot step of a recorded chain over F_{p^2}: the kernel pairing of
// the current quintic model, the six Weierstrass points of the codomain (the
// roots of H_1, H_2, H_3 in this order) and the one moved to infinity next.
struct ChainStep {
  Pairing pairs;
  std::array<Fp2, 6> cod_roots;
  size_t rho = 0;
};

// A (2^n, 2^n)-isogeny E1 x E2 -> F1 x F2 as n (2,2)-steps: gluing, n - 2
// Richelot steps and a splitting. Every Weierstrass point that the replay over
// R has to lift is stored with the polynomial it is a root of (implicitly by
// its position), so that lifting is a sequence of Newton iterations.
struct ChainRecord {
  int n = 0;
  CurveF E1, E2;
  // 2-torsion x-coordinates of E1 and E2 matched by the first kernel
  std::array<Fp2, 3> a, b;
  // +-sqrt(at_0), +-sqrt(at_1), +-sqrt(at_2)
  std::array<Fp2, 6> glue_roots;
  size_t glue_rho = 0;
  std::vector<ChainStep> steps;
  Pairing final_pairs;
  Fp2 split_s, split_t;
  CurveF F1, F2;
  int attempts = 0;

  std::vector<std::string> kinds() const;
};

// Chain with kernel <K1, K2> of order 2^n in (E1 x E2)[2^n]. Degenerate
// coordinates are avoided by retrying with other generators of the same
// kernel and other Weierstrass points at infinity.
ChainRecord compute_22_chain(const CurveF& E1, const CurveF& E2, const ProductPoint& K1, const ProductPoint& K2,
                             int n, Rng& rng, int max_attempts = 32);

// Image of a divisor of the current quintic under one recorded Richelot step
// (exposed for tests). f_next is the codomain quintic.
Divisor<Fp2> push_richelot(const std::array<Poly<Fp2>, 3>& G, const std::array<Poly<Fp2>, 3>& H,
                           const Poly<Fp2>& f_next, const Fp2& rho, const Divisor<Fp2>& D);

// Kernel quadratics of the final step after replaying the chain on a
// deformation E1 x E2 over R; their determinant is the split defect.
struct ChainReplay {
  std::array<RPoly, 3> G;
  Artin defect;
};

ChainReplay lift_22_chain(const ChainRecord& rec, const CurveR& E1, const CurveR& E2);
// Same replay over F_{p^2} (consistency checks).
std::array<Poly<Fp2>, 3> replay_base(const ChainRecord& rec);

// Split factors over R of a replay with zero defect.
std::pair<CurveR, CurveR> split_22(const ChainRecord& rec, const ChainReplay& rp);

// Lift of a pair of 2-torsion coordinates to roots of the deformed polynomials.
struct TwoTorsionRep {
  Artin alpha1, alpha2;
};
TwoTorsionRep lift_2_torsion(const Fp2& alpha1, const RPoly& f1, const Fp2& alpha2, const RPoly& f2);

}  // namespace mp
