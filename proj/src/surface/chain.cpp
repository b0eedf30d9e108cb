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

#include "surface/chain.hpp"

namespace mp {

std::vector<std::string> ChainRecord::kinds() const {
  std::vector<std::string> k = {"glue"};
  for (size_t i = 0; i < steps.size(); ++i) k.push_back("richelot");
  k.push_back("split");
  return k;
}

namespace {

Poly<Fp4> to4(const Poly<Fp2>& f) {
  std::vector<Fp4> c;
  for (const auto& x : f.c) c.push_back(Fp4::embed(x));
  return Poly<Fp4>(std::move(c));
}

Poly<Fp4> conj4(const Poly<Fp4>& f) {
  std::vector<Fp4> c;
  for (const auto& x : f.c) c.push_back(x.conj());
  return Poly<Fp4>(std::move(c));
}

Poly<Fp2> down(const Poly<Fp4>& f) {
  std::vector<Fp2> c;
  for (const auto& x : f.c) {
    if (!x.b.is_zero()) fail(Err::InternalInconsistency, "divisor image is not Galois invariant");
    c.push_back(x.a);
  }
  return Poly<Fp2>(std::move(c));
}

Poly<Fp2> cubic_of(const CurveF& E) { return Poly<Fp2>({E.a6, E.a4, E.a2, Fp2(1)}); }
RPoly cubic_of(const CurveR& E) { return RPoly({E.a6, E.a4, E.a2, Artin(Fp2(1), E.a2.prec())}); }

std::array<Fp2, 2> quadratic_roots(const Poly<Fp2>& q) {
  if (q.deg() != 2) fail(Err::Degenerate, "expected a quadratic");
  Fp2 d = q.c[1] * q.c[1] - q.c[2] * q.c[0] * Fp2(4);
  auto r = fp2_sqrt(d);
  if (!r) fail(Err::InternalInconsistency, "2-torsion is not rational over F_{p^2}");
  if (r->is_zero()) fail(Err::Degenerate, "repeated Weierstrass point");
  Fp2 i2 = (q.c[2] * Fp2(2)).inv();
  return {(-q.c[1] + *r) * i2, (-q.c[1] - *r) * i2};
}

// Which pair of the quintic's Weierstrass points a 2-torsion divisor is.
std::array<int, 2> torsion_pair(const HyperellipticCurve<Fp2>& Q, const Divisor<Fp2>& D) {
  if (!D.v.is_zero() || D.u.deg() < 1) fail(Err::NotIsotropic, "kernel divisor is not of order 2");
  std::vector<int> idx;
  for (int i = 0; i < 5; ++i) {
    if (eval(D.u, Q.roots[i]).is_zero()) idx.push_back(i);
  }
  if (static_cast<int>(idx.size()) != D.u.deg()) fail(Err::Structural, "kernel divisor is not a sum of Weierstrass points");
  if (idx.size() == 1) idx.push_back(kInfinity);
  return {idx[0], idx[1]};
}

Pairing kernel_pairing(const HyperellipticCurve<Fp2>& Q, const Divisor<Fp2>& D1, const Divisor<Fp2>& D2) {
  Pairing pr;
  pr[0] = torsion_pair(Q, D1);
  pr[1] = torsion_pair(Q, D2);
  bool used[6] = {};
  for (int k = 0; k < 2; ++k) {
    for (int i : pr[k]) {
      if (used[i]) fail(Err::NotIsotropic, "kernel 2-torsion is not a (2,2)-subgroup");
      used[i] = true;
    }
  }
  int m = 0;
  for (int i = 0; i < 6; ++i) {
    if (!used[i]) pr[2][m++] = i;
  }
  return pr;
}

Divisor<Fp2> glue_push(const Gluing<Fp2>& g, const Fp2& rho, const Poly<Fp2>& f, const ProductPoint& P) {
  Divisor<Fp2> D = Divisor<Fp2>::zero(rho);
  if (!P.a.inf) {
    auto [u, v] = glue_pullback1(g, P.a);
    D = cantor_add(f, D, sextic_divisor_to_quintic(u, v, rho));
  }
  if (!P.b.inf) {
    auto [u, v] = glue_pullback2(g, P.b);
    D = cantor_add(f, D, sextic_divisor_to_quintic(u, v, rho));
  }
  return D;
}

uint64_t pow2(int e) { return uint64_t(1) << e; }

ChainRecord chain_attempt(const CurveF& E1, const CurveF& E2, const ProductPoint& K1, const ProductPoint& K2, int n,
                          Rng& rng) {
  ChainRecord rec;
  rec.n = n;
  rec.E1 = E1;
  rec.E2 = E2;
  auto mulp = [&](const ProductPoint& P, uint64_t k) { return ProductPoint{mul(E1, P.a, k), mul(E2, P.b, k)}; };
  ProductPoint T1 = mulp(K1, pow2(n - 1)), T2 = mulp(K2, pow2(n - 1));
  if (T1.a.inf || T2.a.inf || T1.b.inf || T2.b.inf || T1.a == T2.a || T1.b == T2.b) {
    fail(Err::WouldSplit, "first kernel is not the graph of an isomorphism of 2-torsion");
  }
  PointF T3a = add(E1, T1.a, T2.a), T3b = add(E2, T1.b, T2.b);
  rec.a = {T1.a.x, T2.a.x, T3a.x};
  rec.b = {T1.b.x, T2.b.x, T3b.x};
  Gluing<Fp2> g = glue_params(rec.a, rec.b);
  HyperellipticCurve<Fp2> C{g.s1, {}};
  for (int i = 0; i < 3; ++i) {
    auto r = fp2_sqrt(g.at[i]);
    if (!r) fail(Err::InternalInconsistency, "glued curve has irrational 2-torsion");
    rec.glue_roots[2 * i] = *r;
    rec.glue_roots[2 * i + 1] = -*r;
    C.roots.push_back(*r);
    C.roots.push_back(-*r);
  }
  rec.glue_rho = rng() % 6;
  HyperellipticCurve<Fp2> Q = to_quintic(C, rec.glue_rho);
  Poly<Fp2> f = Q.poly();
  const Fp2 rho = C.roots[rec.glue_rho];
  std::array<Divisor<Fp2>, 2> D = {glue_push(g, rho, f, K1), glue_push(g, rho, f, K2)};

  for (int i = 1; i < n; ++i) {
    Divisor<Fp2> k1 = cantor_mul(f, D[0], pow2(n - 1 - i)), k2 = cantor_mul(f, D[1], pow2(n - 1 - i));
    Pairing pr = kernel_pairing(Q, k1, k2);
    auto G = pair_polys(Q, pr);
    Fp2 delta = richelot_delta(G);
    if (i == n - 1) {
      if (!delta.is_zero()) fail(Err::NotSplit, "final (2,2)-step does not split");
      rec.final_pairs = pr;
      auto st = quadratic_roots(split_wronskian(G));
      rec.split_s = st[0];
      rec.split_t = st[1];
      auto F = split_factors(G, st[0], st[1]);
      rec.F1 = F.first;
      rec.F2 = F.second;
      return rec;
    }
    if (delta.is_zero()) fail(Err::PrematureSplit, "chain splits at step " + std::to_string(i + 1));
    auto H = richelot_duals(G);
    ChainStep st;
    st.pairs = pr;
    HyperellipticCurve<Fp2> Cn{H[0].lead() * H[1].lead() * H[2].lead() * delta.inv(), {}};
    for (int k = 0; k < 3; ++k) {
      auto r = quadratic_roots(H[k]);
      st.cod_roots[2 * k] = r[0];
      st.cod_roots[2 * k + 1] = r[1];
      Cn.roots.push_back(r[0]);
      Cn.roots.push_back(r[1]);
    }
    st.rho = rng() % 6;
    HyperellipticCurve<Fp2> Qn = to_quintic(Cn, st.rho);
    Poly<Fp2> fn = Qn.poly();
    const Fp2 rn = Cn.roots[st.rho];
    for (auto& d : D) d = push_richelot(G, H, fn, rn, d);
    rec.steps.push_back(st);
    Q = std::move(Qn);
    f = std::move(fn);
  }
  fail(Err::Structural, "chain length must be at least 2");
}

}  // namespace

Divisor<Fp2> push_richelot(const std::array<Poly<Fp2>, 3>& G, const std::array<Poly<Fp2>, 3>& H,
                           const Poly<Fp2>& f_next, const Fp2& rho, const Divisor<Fp2>& D) {
  if (D.is_zero()) return D;
  if (D.u.deg() != 2) fail(Err::Degenerate, "Richelot image of a degree-1 divisor");
  const Fp2 u1 = D.u.c[1], u0 = D.u.c[0];
  const Fp2 disc = u1 * u1 - u0 * Fp2(4);
  const Fp2 half = Fp2(2).inv();
  if (auto r = fp2_sqrt(disc)) {
    Divisor<Fp2> acc = Divisor<Fp2>::zero(rho);
    for (const Fp2& x : {(-u1 + *r) * half, (-u1 - *r) * half}) {
      auto [u, v] = richelot_point_image(G, H, x, eval(D.v, x));
      acc = cantor_add(f_next, acc, sextic_divisor_to_quintic(u, v, rho));
    }
    return acc;
  }
  // conjugate pair over F_{p^4} = F_{p^2}(sqrt(nu))
  auto s = fp2_sqrt(disc * Fp4::nr.inv());
  if (!s) fail(Err::InternalInconsistency, "F_{p^4} square root");
  Fp4 x = (Fp4::embed(-u1) + Fp4(Fp2(), *s)) * half;
  Fp4 y = eval(to4(D.v), x);
  std::array<Poly<Fp4>, 3> G4, H4;
  for (int k = 0; k < 3; ++k) {
    G4[k] = to4(G[k]);
    H4[k] = to4(H[k]);
  }
  auto [u, v] = richelot_point_image(G4, H4, x, y);
  Divisor<Fp4> A = sextic_divisor_to_quintic(u, v, Fp4::embed(rho));
  Divisor<Fp4> B{conj4(A.u), conj4(A.v)};
  Divisor<Fp4> S = cantor_add(to4(f_next), A, B);
  return {down(S.u), down(S.v)};
}

ChainRecord compute_22_chain(const CurveF& E1, const CurveF& E2, const ProductPoint& K1, const ProductPoint& K2,
                             int n, Rng& rng, int max_attempts) {
  if (n < 2) fail(Err::InvalidArgument, "chain length must be at least 2");
  const uint64_t N = pow2(n);
  for (const auto* K : {&K1, &K2}) {
    if (!has_exact_order(E1, K->a, N) && !has_exact_order(E2, K->b, N)) {
      fail(Err::NotIsotropic, "kernel generator does not have order 2^n");
    }
    if (!mul(E1, K->a, N).inf || !mul(E2, K->b, N).inf) fail(Err::NotIsotropic, "kernel generator is not 2^n-torsion");
  }
  Fp2 e = weil_pairing(E1, K1.a, K2.a, N, rng) * weil_pairing(E2, K1.b, K2.b, N, rng);
  if (e != Fp2(1)) fail(Err::NotIsotropic, "kernel is not isotropic");

  ProductPoint A = K1, B = K2;
  for (int attempt = 1;; ++attempt) {
    try {
      ChainRecord rec = chain_attempt(E1, E2, A, B, n, rng);
      rec.attempts = attempt;
      return rec;
    } catch (const Error& err) {
      if (err.code() != Err::Degenerate || attempt >= max_attempts) throw;
    }
    // another basis of the same kernel
    uint64_t r = rng() % N, s = rng() % N;
    A = {add(E1, A.a, mul(E1, B.a, r)), add(E2, A.b, mul(E2, B.b, r))};
    B = {add(E1, B.a, mul(E1, A.a, s)), add(E2, B.b, mul(E2, A.b, s))};
  }
}

namespace {

template <class T, class Lift>
std::array<Poly<T>, 3> replay(const ChainRecord& rec, const Curve<T>& E1, const Curve<T>& E2, Lift lift) {
  auto c1 = cubic_of(E1), c2 = cubic_of(E2);
  std::array<T, 3> a, b;
  for (int i = 0; i < 3; ++i) {
    a[i] = lift(rec.a[i], c1);
    b[i] = lift(rec.b[i], c2);
  }
  Gluing<T> g = glue_params(a, b);
  HyperellipticCurve<T> C{g.s1, {}};
  const T one = const_like(g.s1, Fp2(1));
  for (size_t m = 0; m < 6; ++m) {
    Poly<T> q({-g.at[m / 2], zero_like(one), one});
    C.roots.push_back(lift(rec.glue_roots[m], q));
  }
  HyperellipticCurve<T> Q = to_quintic(C, rec.glue_rho);
  for (const ChainStep& st : rec.steps) {
    auto G = pair_polys(Q, st.pairs);
    T delta = richelot_delta(G);
    if (!is_unit(delta)) fail(Err::PrematureSplit, "replayed chain splits early");
    auto H = richelot_duals(G);
    HyperellipticCurve<T> Cn{H[0].lead() * H[1].lead() * H[2].lead() * inv(delta), {}};
    for (size_t m = 0; m < 6; ++m) Cn.roots.push_back(lift(st.cod_roots[m], H[m / 2]));
    Q = to_quintic(Cn, st.rho);
  }
  return pair_polys(Q, rec.final_pairs);
}

}  // namespace

ChainReplay lift_22_chain(const ChainRecord& rec, const CurveR& E1, const CurveR& E2) {
  if (!(reduce(E1) == rec.E1) || !(reduce(E2) == rec.E2)) {
    fail(Err::Structural, "lift_22_chain: deformation does not reduce to the recorded domain");
  }
  auto lift = [](const Fp2& r, const RPoly& f) { return newton_lift(r, f); };
  ChainReplay out;
  out.G = replay(rec, E1, E2, lift);
  out.defect = richelot_delta(out.G);
  return out;
}

std::array<Poly<Fp2>, 3> replay_base(const ChainRecord& rec) {
  auto lift = [](const Fp2& r, const Poly<Fp2>& f) {
    if (!eval(f, r).is_zero()) fail(Err::InternalInconsistency, "recorded root is not a root");
    return r;
  };
  return replay(rec, rec.E1, rec.E2, lift);
}

std::pair<CurveR, CurveR> split_22(const ChainRecord& rec, const ChainReplay& rp) {
  if (!rp.defect.is_zero()) fail(Err::NotSplit, "split_22: defect is not zero");
  RPoly W = split_wronskian(rp.G);
  Artin s = newton_lift(rec.split_s, W), t = newton_lift(rec.split_t, W);
  return split_factors(rp.G, s, t);
}

TwoTorsionRep lift_2_torsion(const Fp2& alpha1, const RPoly& f1, const Fp2& alpha2, const RPoly& f2) {
  return {newton_lift(alpha1, f1), newton_lift(alpha2, f2)};
}

}  // namespace mp
