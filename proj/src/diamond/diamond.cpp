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

#include "diamond/diamond.hpp"

namespace mp {

CurveR with_prec(const CurveR& E, size_t prec) {
  return {E.a2.with_prec(prec), E.a4.with_prec(prec), E.a6.with_prec(prec)};
}

DiamondSpec make_diamond(const DiamondParams& params, const CurveF& E, const PointF& Pk,
                         const std::optional<AuxLegs>& aux) {
  if ((params.c == 3) != aux.has_value()) fail(Err::InvalidArgument, "auxiliary legs are needed exactly when c = 3");
  DiamondSpec d;
  d.params = params;
  d.E = E;
  d.Pk = Pk;
  d.fk = velu(E, Pk, params.ell);
  d.fkp = velu(E, gamma_map(Pk, params.a, params.b), params.ell);
  d.aux = aux;
  return d;
}

std::pair<ProductPoint, ProductPoint> kani_kernel(const DiamondSpec& d, const PointF& P, const PointF& Q, Rng& rng) {
  const auto& pr = d.params;
  auto gen = [&](const PointF& R) {
    PointF first = gamma_dual(R, pr.a, pr.b);
    PointF second = d.fkp(R);
    if (d.aux) {
      first = d.aux->g(first);
      second = mul(d.Ekp(), second, 3);
    }
    return ProductPoint{first, second};
  };
  ProductPoint K1 = gen(P), K2 = gen(Q);
  const uint64_t N = uint64_t(1) << pr.n;
  for (const auto* K : {&K1, &K2}) {
    if (!has_exact_order(d.D1(), K->a, N) || !has_exact_order(d.Ekp(), K->b, N)) {
      fail(Err::NotIsotropic, "Kani kernel generator does not have order 2^n");
    }
  }
  Fp2 e = weil_pairing(d.D1(), K1.a, K2.a, N, rng) * weil_pairing(d.Ekp(), K1.b, K2.b, N, rng);
  if (e != Fp2(1)) fail(Err::NotIsotropic, "Kani kernel is not isotropic");
  return {K1, K2};
}

LiftResult lift_isogeny_diamond(const DiamondSpec& d, const ChainRecord& rec, const CurveR& D1R, const Fp2& probe) {
  const size_t prec = D1R.a2.prec();
  for (const Fp2& j : {j_invariant(d.D1()), j_invariant(d.X()), j_invariant(d.Ek()), j_invariant(d.Ekp())}) {
    if (j.is_zero() || j == Fp2(1728)) fail(Err::ExcludedJInvariant, "diamond vertex with j = 0 or 1728");
  }
  if (probe.is_zero()) fail(Err::InvalidArgument, "secant probe must be a unit");
  const Fp2 jx = j_invariant(d.X()), jk0 = j_invariant(d.Ek());
  if (jx == jk0) fail(Err::SkippedPrime, "split factors are not distinguishable mod eps");

  LiftResult out;
  auto defect = [&](const Artin& j, size_t P) {
    return lift_22_chain(rec, with_prec(D1R, P), curve_from_j_anchored(d.Ekp(), j.with_prec(P))).defect;
  };
  Artin j(j_invariant(d.Ekp()), prec);
  for (size_t s = 1; s < prec; s *= 2) {
    const size_t P = std::min(2 * s, prec);
    out.round_precisions.push_back(P);
    Artin d0 = defect(j, P);
    Artin d1 = defect(j + Artin::eps(prec, s) * probe, P);
    out.defect_valuations.push_back(d0.valuation());
    Artin diff = d1 - d0;
    if (diff.valuation() != s) {
      fail(Err::DegenerateSecant, "secant difference has valuation " + std::to_string(diff.valuation()) +
                                      ", expected " + std::to_string(s));
    }
    // j <- j - eps^s probe d0 / (d1 - d0): the affine model of the defect
    // along j + t eps^s probe has its zero at t = -d0 / (d1 - d0).
    Artin corr = exact_div(d0, diff);
    Artin step(prec);
    for (size_t i = 0; i < corr.prec() && s + i < prec; ++i) step[s + i] = corr[i] * probe;
    j = j - step;
  }
  ChainReplay fin = lift_22_chain(rec, D1R, curve_from_j_anchored(d.Ekp(), j));
  out.defect_valuations.push_back(fin.defect.valuation());
  if (!fin.defect.is_zero()) {
    fail(Err::ConvergenceFailure, "defect has valuation " + std::to_string(fin.defect.valuation()) +
                                      " after the last round, precision " + std::to_string(prec));
  }
  auto [F1, F2] = split_22(rec, fin);
  Artin j1 = j_invariant(F1), j2 = j_invariant(F2);
  if (j1.residue() == jk0 && j2.residue() == jx) {
    out.jk = j1;
  } else if (j2.residue() == jk0 && j1.residue() == jx) {
    out.jk = j2;
  } else {
    fail(Err::InternalInconsistency, "split factors do not reduce to the diamond's vertices");
  }
  return out;
}

}  // namespace mp
