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

#include "modpoly/modpoly.hpp"

#include <algorithm>
#include <cmath>

namespace mp {

bool is_odd_prime(long long l) { return l >= 3 && l % 2 == 1 && is_prime_u64(static_cast<uint64_t>(l)); }

int parameter_cap(int ell) {
  int lg = 0;
  while ((1LL << lg) < ell) ++lg;
  return 4 * lg + 16;
}

namespace {

bool is_square_u64(uint64_t x, uint64_t& r) {
  r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

}  // namespace

DiamondParams find_diamond_parameters(int ell) {
  if (!is_odd_prime(ell)) fail(Err::InvalidArgument, "l must be an odd prime");
  DiamondParams d;
  d.ell = ell;
  d.c = (ell % 4 == 3) ? 1 : 3;
  const int cap = std::min(parameter_cap(ell), 62);
  const uint64_t cl = static_cast<uint64_t>(d.c) * static_cast<uint64_t>(ell);
  for (int n = 1; n <= cap; ++n) {
    uint64_t t = uint64_t(1) << n;
    if (t <= cl) continue;
    uint64_t m = t - cl;
    for (uint64_t a = 0; a * a <= m; ++a) {
      uint64_t rest = m - a * a, b;
      if (rest % 4 == 0 && is_square_u64(rest / 4, b)) {
        d.n = n;
        d.a = static_cast<long long>(a);
        d.b = static_cast<long long>(b);
        return d;
      }
    }
  }
  fail(Err::NoParameters, "no diamond parameters for l = " + std::to_string(ell) + " below the cap");
}

uint64_t next_suitable_prime(const DiamondParams& params, uint64_t after) {
  const uint64_t M = (uint64_t(1) << params.n) * static_cast<uint64_t>(params.c) * static_cast<uint64_t>(params.ell);
  uint64_t lo = std::max<uint64_t>(after, 11) + 1;
  // first p >= lo with p = M - 1 mod M
  uint64_t p = ((lo + 1 + M - 1) / M) * M - 1;
  while (!is_prime_u64(p)) p += M;
  return p;
}

bool is_recoverable(Err e) {
  switch (e) {
    case Err::SkippedPrime:
    case Err::ExcludedJInvariant:
    case Err::DegenerateSecant:
    case Err::SamplingFailure:
    case Err::Degenerate:
      return true;
    default:
      return false;
  }
}

Rng pipeline_rng(uint64_t seed, int ell, uint64_t p, uint64_t stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(ell),
                    static_cast<uint32_t>(p), static_cast<uint32_t>(p >> 32), static_cast<uint32_t>(stream)};
  return Rng(seq);
}

std::vector<Fp2> substitute_epsilon(const RPoly& phi, const Fp2& j0) {
  const size_t dy = phi.c.size();
  const size_t prec = dy ? phi.c[0].prec() : 0;
  const size_t dx = prec;
  // binom(e, t) (-j0)^(e - t)
  std::vector<std::vector<Fp2>> B(prec, std::vector<Fp2>(prec));
  std::vector<Fp2> mj(prec);
  mj[0] = Fp2(1);
  for (size_t e = 1; e < prec; ++e) mj[e] = mj[e - 1] * (-j0);
  std::vector<std::vector<Fp2>> binom(prec, std::vector<Fp2>(prec));
  for (size_t e = 0; e < prec; ++e) {
    binom[e][0] = Fp2(1);
    for (size_t t = 1; t <= e; ++t) binom[e][t] = binom[e - 1][t - 1] + (t < e ? binom[e - 1][t] : Fp2());
  }
  std::vector<Fp2> grid(dx * dy);
  for (size_t j = 0; j < dy; ++j) {
    for (size_t e = 0; e < prec; ++e) {
      const Fp2& c = phi.c[j][e];
      if (c.is_zero()) continue;
      for (size_t t = 0; t <= e; ++t) grid[t * dy + j] += c * binom[e][t] * mj[e - t];
    }
  }
  return grid;
}

ModPolyModP assemble_modp(int ell, const std::vector<Artin>& jk, const Fp2& j0) {
  const size_t dim = static_cast<size_t>(ell + 2);
  if (jk.size() != dim - 1) fail(Err::Structural, "assemble: expected l + 1 lifted j-invariants");
  std::vector<RPoly> lin;
  for (const auto& j : jk) {
    if (j.prec() != dim) fail(Err::Structural, "assemble: precision must be l + 2");
    lin.push_back(linear(j));
  }
  RPoly phi = product_tree(lin);
  std::vector<Fp2> g = substitute_epsilon(phi, j0);
  ModPolyModP out;
  out.ell = ell;
  out.p = Fp::p;
  out.cells.resize(dim * dim);
  for (size_t i = 0; i < dim * dim; ++i) {
    if (!g[i].b.is_zero()) fail(Err::CoefficientNotRational, "coefficient outside F_p");
    out.cells[i] = g[i].a.v;
  }
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (out.at(i, j) != out.at(j, i)) fail(Err::InternalInconsistency, "phi mod p is not symmetric");
    }
  }
  if (out.at(dim - 1, 0) != 1 || out.at(0, dim - 1) != 1) fail(Err::InternalInconsistency, "phi mod p is not monic");
  return out;
}

namespace {

bool special(const Fp2& j) { return j.is_zero() || j == Fp2(1728); }

std::optional<AuxLegs> choose_aux(const CurveF& E, const DiamondParams& pr, const std::vector<Fp2>& jEk, Rng& rng,
                                  int& choice) {
  auto [A, B] = torsion_basis(E, 3, rng);
  const PointF gens[4] = {A, B, add(E, A, B), add(E, A, mul(E, B, 2))};
  for (int t = 0; t < 4; ++t) {
    AuxLegs aux;
    aux.P3 = gens[t];
    aux.g = velu(E, aux.P3, 3);
    aux.C1 = velu(E, gamma_map(aux.P3, pr.a, pr.b), 3).cod;
    Fp2 j0 = j_invariant(aux.g.cod), j1 = j_invariant(aux.C1);
    if (special(j0) || special(j1)) continue;
    if (std::find(jEk.begin(), jEk.end(), j1) != jEk.end()) continue;
    choice = t;
    return aux;
  }
  return std::nullopt;
}

}  // namespace

ModPolyModP modular_polynomial_modp(int ell, uint64_t p, const DiamondParams& params, uint64_t seed,
                                    ModpDiagnostics* diag) {
  if (params.ell != ell) fail(Err::InvalidArgument, "parameters belong to another l");
  const uint64_t M = (uint64_t(1) << params.n) * static_cast<uint64_t>(params.c) * static_cast<uint64_t>(ell);
  if (p <= 11 || (p + 1) % M != 0 || !is_prime_u64(p)) fail(Err::InvalidArgument, "p is not a suitable prime");
  FieldScope fs(p);
  Rng rng = pipeline_rng(seed, ell, p, 0);
  const size_t prec = static_cast<size_t>(ell + 2);

  const CurveF E = e0_curve();
  if (!mul(E, random_point(E, rng), static_cast<Scalar>(p + 1) * (p + 1)).inf) {
    fail(Err::InternalInconsistency, "E0 does not have (p+1)^2 points");
  }
  const Fp2 j0 = j_invariant(E);
  if (special(j0)) fail(Err::SkippedPrime, "j(E0) is special mod p");
  auto [Pl, Ql] = torsion_basis(E, static_cast<uint64_t>(ell), rng);
  auto [P2, Q2] = torsion_basis(E, uint64_t(1) << params.n, rng);

  std::vector<PointF> kernels;
  for (int k = 0; k <= ell; ++k) kernels.push_back(k < ell ? add(E, Pl, mul(E, Ql, static_cast<Scalar>(k))) : Ql);
  std::vector<DiamondSpec> specs;
  std::vector<Fp2> jEk;
  for (const auto& Pk : kernels) {
    DiamondSpec d = make_diamond(params, E, Pk, params.c == 3 ? std::optional<AuxLegs>(AuxLegs{}) : std::nullopt);
    if (special(j_invariant(d.Ek())) || special(j_invariant(d.Ekp()))) {
      fail(Err::SkippedPrime, "diamond vertex with j = 0 or 1728");
    }
    jEk.push_back(j_invariant(d.Ek()));
    specs.push_back(std::move(d));
  }

  CurveR ER = curve_from_j_anchored(E, Artin(j0, prec) + Artin::eps(prec));
  CurveR D1R = ER;
  if (params.c == 3) {
    int choice = -1;
    auto aux = choose_aux(E, params, jEk, rng, choice);
    if (!aux) fail(Err::SkippedPrime, "no admissible auxiliary 3-isogeny");
    for (auto& d : specs) d.aux = aux;
    D1R = velu(ER, lift_point(E, aux->P3, ER, 3), 3).cod;
    if (diag) diag->aux_choice = choice;
  } else if (std::find(jEk.begin(), jEk.end(), j0) != jEk.end()) {
    fail(Err::SkippedPrime, "an l-isogenous curve has j = j(E0)");
  }

  std::vector<Artin> jk;
  for (int k = 0; k <= ell; ++k) {
    const DiamondSpec& d = specs[static_cast<size_t>(k)];
    auto [K1, K2] = kani_kernel(d, P2, Q2, rng);
    ChainRecord rec = compute_22_chain(d.D1(), d.Ekp(), K1, K2, params.n, rng);
    std::vector<Fp2> got = {j_invariant(rec.F1), j_invariant(rec.F2)};
    std::vector<Fp2> want = {j_invariant(d.X()), j_invariant(d.Ek())};
    if (!std::is_permutation(got.begin(), got.end(), want.begin())) {
      fail(Err::InternalInconsistency, "chain codomain does not match the diamond");
    }
    LiftResult res = lift_isogeny_diamond(d, rec, D1R);
    jk.push_back(res.jk);
    if (diag) {
      diag->lifts.push_back(res);
      diag->chains.push_back(rec);
    }
  }
  if (diag) diag->jk = jk;
  return assemble_modp(ell, jk, j0);
}

}  // namespace mp
