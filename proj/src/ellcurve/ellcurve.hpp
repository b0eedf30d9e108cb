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

#include <utility>

#include "ellcurve/curve.hpp"

namespace mp {

using CurveF = Curve<Fp2>;
using PointF = Point<Fp2>;
using CurveR = Curve<Artin>;
using PointR = Point<Artin>;

CurveR embed(const CurveF& E, size_t prec);
PointR embed(const PointF& P, size_t prec);
CurveF reduce(const CurveR& E);
PointF reduce(const PointR& P);

// y^2 = x^3 + a x + a with a = 27 j / (4 (1728 - j)).
CurveR curve_from_j_deformation(const Artin& jtilde);
// Deformation with j-invariant jtilde whose reduction mod eps is exactly the
// model E (not just isomorphic to it): the short form of E is rescaled along
// the family above, then shifted back.
CurveR curve_from_j_anchored(const CurveF& E, const Artin& jtilde);

PointF random_point(const CurveF& E, Rng& rng);

// Miller's algorithm; a random auxiliary point keeps supports disjoint.
Fp2 weil_pairing(const CurveF& E, const PointF& P, const PointF& Q, uint64_t N, Rng& rng);

// Exact order of P dividing N (N given with its prime factorisation).
bool has_exact_order(const CurveF& E, const PointF& P, uint64_t N);
bool root_of_unity_exact_order(const Fp2& z, uint64_t N);

// Basis of E[N] for E with E(F_{p^2}) = (Z/(p+1))^2 and N | p+1.
std::pair<PointF, PointF> torsion_basis(const CurveF& E, uint64_t N, Rng& rng, int budget = 64);

// Newton lift of P in E[N] to the N-torsion of the deformation ER.
PointR lift_point(const CurveF& E, const PointF& P, const CurveR& ER, int N);
// Same with a precomputed division polynomial of ER.
PointR lift_point(const PointF& P, const CurveR& ER, const RPoly& psiN);

// E0: y^2 = x^3 + 6 x^2 + x and iota = phihat o i o phi, where phi is the
// 2-isogeny with kernel (0,0) to y^2 = x(x-4)(x-8) (j = 1728) and i is its
// automorphism x -> 8 - x, y -> sqrt(-1) y. iota^2 = [-4].
CurveF e0_curve();
PointF iota(const PointF& P);
// gamma = [a] + [b] iota and its dual [a] - [b] iota.
PointF gamma_map(const PointF& P, long long a, long long b);
PointF gamma_dual(const PointF& P, long long a, long long b);

}  // namespace mp
