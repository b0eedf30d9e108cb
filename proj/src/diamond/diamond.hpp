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

#include <optional>

#include "surface/chain.hpp"

namespace mp {

// 2^n - c l = a^2 + 4 b^2 with c = -l mod 4.
struct DiamondParams {
  int ell = 0;
  int c = 1;
  int n = 0;
  long long a = 0, b = 0;
};

// Auxiliary 3-isogeny legs for c = 3: g: E -> C0 with kernel <P3>, and
// C1 = E / <gamma(P3)>.
struct AuxLegs {
  PointF P3;
  Isogeny<Fp2> g;
  CurveF C1;
};

// The diamond for one kernel point P_k of E[l]:
//   f_k: E -> E_k with kernel <P_k>, f_k': E -> E_k' with kernel <gamma(P_k)>,
// glued into a (2^n, 2^n)-isogeny D1 x E_k' -> X x E_k with D1 = E (c = 1) or
// C0 (c = 3), and X = E or C1 respectively.
struct DiamondSpec {
  DiamondParams params;
  CurveF E;
  PointF Pk;
  Isogeny<Fp2> fk, fkp;
  std::optional<AuxLegs> aux;

  const CurveF& Ek() const { return fk.cod; }
  const CurveF& Ekp() const { return fkp.cod; }
  const CurveF& D1() const { return aux ? aux->g.cod : E; }
  const CurveF& X() const { return aux ? aux->C1 : E; }
};

DiamondSpec make_diamond(const DiamondParams& params, const CurveF& E, const PointF& Pk,
                         const std::optional<AuxLegs>& aux);

// Generators (gamma^(P), f_k'(P)) and, for c = 3, (g(gamma^(P)), 3 f_k'(P)),
// for a basis P, Q of E[2^n].
std::pair<ProductPoint, ProductPoint> kani_kernel(const DiamondSpec& d, const PointF& P, const PointF& Q, Rng& rng);

struct LiftResult {
  Artin jk;
  // v(defect) at the current estimate at the start of each round and, last,
  // at full precision after the final round
  std::vector<size_t> defect_valuations;
  // working precision of each round
  std::vector<size_t> round_precisions;
};

// Deforms E_k' until the replayed chain splits over R = F_{p^2}[eps]/(eps^prec),
// starting from D1R, a deformation of D1. Returns j of the split factor above
// E_k. probe scales the secant offset (any unit gives the same result).
LiftResult lift_isogeny_diamond(const DiamondSpec& d, const ChainRecord& rec, const CurveR& D1R,
                                const Fp2& probe = Fp2(1));

CurveR with_prec(const CurveR& E, size_t prec);

}  // namespace mp
