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

#include "ringarith/poly.hpp"

#include <gmp.h>

#include <algorithm>

namespace mp {

std::atomic<int> g_kronecker_threshold{12};

namespace {

int bit_length(uint64_t x) { return x ? 64 - __builtin_clzll(x) : 0; }

// Product of two polynomials over F_p by packing coefficients into one large
// integer with slots wide enough to hold every convolution sum.
std::vector<Fp> kron_fp(const std::vector<Fp>& a, const std::vector<Fp>& b) {
  if (a.empty() || b.empty()) return {};
  const uint64_t p = Fp::p;
  const size_t n = std::min(a.size(), b.size());
  const int slot = 2 * bit_length(p - 1) + bit_length(n) + 1;
  if (slot > 128) return schoolbook_mul(a, b);

  auto pack = [&](const std::vector<Fp>& v, mpz_t out) {
    size_t bits = v.size() * slot;
    std::vector<uint64_t> words((bits + 63) / 64 + 1, 0);
    for (size_t i = 0; i < v.size(); ++i) {
      size_t pos = i * slot;
      size_t w = pos / 64, off = pos % 64;
      words[w] |= v[i].v << off;
      if (off && off + bit_length(v[i].v) > 64) words[w + 1] |= v[i].v >> (64 - off);
    }
    mpz_import(out, words.size(), -1, sizeof(uint64_t), 0, 0, words.data());
  };

  mpz_t A, B, C;
  mpz_inits(A, B, C, nullptr);
  pack(a, A);
  pack(b, B);
  mpz_mul(C, A, B);
  size_t count = 0;
  size_t out_len = a.size() + b.size() - 1;
  std::vector<uint64_t> words((out_len * slot + 63) / 64 + 3, 0);
  mpz_export(words.data(), &count, -1, sizeof(uint64_t), 0, 0, C);
  mpz_clears(A, B, C, nullptr);

  std::vector<Fp> r(out_len);
  for (size_t i = 0; i < out_len; ++i) {
    size_t pos = i * slot;
    unsigned __int128 acc = 0;
    for (int k = 0; k < 3; ++k) {
      size_t bit = pos + 64 * k;
      if (static_cast<int>(64 * k) >= slot) break;
      size_t w = bit / 64, off = bit % 64;
      uint64_t lo = words[w] >> off;
      if (off) lo |= words[w + 1] << (64 - off);
      int take = std::min(64, slot - 64 * k);
      if (take < 64) lo &= (uint64_t(1) << take) - 1;
      acc |= static_cast<unsigned __int128>(lo) << (64 * k);
    }
    r[i] = Fp::raw(static_cast<uint64_t>(acc % p));
  }
  return r;
}

}  // namespace

std::vector<Fp2> kronecker_mul(const std::vector<Fp2>& a, const std::vector<Fp2>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Fp> a0(a.size()), a1(a.size()), as(a.size());
  std::vector<Fp> b0(b.size()), b1(b.size()), bs(b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    a0[i] = a[i].a;
    a1[i] = a[i].b;
    as[i] = a[i].a + a[i].b;
  }
  for (size_t i = 0; i < b.size(); ++i) {
    b0[i] = b[i].a;
    b1[i] = b[i].b;
    bs[i] = b[i].a + b[i].b;
  }
  auto p00 = kron_fp(a0, b0), p11 = kron_fp(a1, b1), pss = kron_fp(as, bs);
  std::vector<Fp2> r(p00.size());
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] = Fp2(p00[i] + Fp2::nr * p11[i], pss[i] - p00[i] - p11[i]);
  }
  return r;
}

// Over R the eps-degree is folded into the variable: x^i eps^k -> z^{i(2P-1)+k}.
std::vector<Artin> kronecker_mul(const std::vector<Artin>& a, const std::vector<Artin>& b) {
  if (a.empty() || b.empty()) return {};
  const size_t P = a[0].prec();
  for (const auto& x : a) {
    if (x.prec() != P) fail(Err::Structural, "precision mismatch in polynomial");
  }
  for (const auto& x : b) {
    if (x.prec() != P) fail(Err::Structural, "precision mismatch in polynomial");
  }
  const size_t stride = 2 * P - 1;
  auto flatten = [&](const std::vector<Artin>& v) {
    std::vector<Fp2> f(v.size() * stride);
    for (size_t i = 0; i < v.size(); ++i) {
      for (size_t k = 0; k < P; ++k) f[i * stride + k] = v[i][k];
    }
    return f;
  };
  auto prod = kronecker_mul(flatten(a), flatten(b));
  std::vector<Artin> r(a.size() + b.size() - 1, Artin(P));
  for (size_t i = 0; i < r.size(); ++i) {
    for (size_t k = 0; k < P; ++k) {
      size_t idx = i * stride + k;
      if (idx < prod.size()) r[i][k] = prod[idx];
    }
  }
  return r;
}

RPoly with_prec(const RPoly& f, size_t prec) {
  std::vector<Artin> r;
  r.reserve(f.c.size());
  for (const auto& x : f.c) r.push_back(x.with_prec(prec));
  return RPoly(std::move(r));
}

RPoly embed(const Poly<Fp2>& f, size_t prec) {
  std::vector<Artin> r;
  r.reserve(f.c.size());
  for (const auto& x : f.c) r.emplace_back(x, prec);
  return RPoly(std::move(r));
}

Poly<Fp2> reduce(const RPoly& f) {
  std::vector<Fp2> r;
  r.reserve(f.c.size());
  for (const auto& x : f.c) r.push_back(x.residue());
  return Poly<Fp2>(std::move(r));
}

Artin newton_lift(const Fp2& alpha, const RPoly& f) {
  if (f.is_zero()) fail(Err::Structural, "newton_lift of the zero polynomial");
  const size_t prec = f.c[0].prec();
  Poly<Fp2> f0 = reduce(f);
  if (!eval(f0, alpha).is_zero()) fail(Err::Structural, "newton_lift: alpha is not a root mod eps");
  Fp2 d0 = eval(deriv(f0), alpha);
  if (d0.is_zero()) fail(Err::SingularJacobian, "newton_lift: f'(alpha) vanishes mod eps");
  Artin x(alpha, 1);
  size_t k = 1;
  while (k < prec) {
    k = std::min(2 * k, prec);
    RPoly fk = with_prec(f, k);
    Artin xk = x.with_prec(k);
    Artin num = eval(fk, xk);
    Artin den = eval(deriv(fk), xk);
    x = xk - num * den.inv();
  }
  return x.with_prec(prec);
}

}  // namespace mp
