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

#include "crt/crt.hpp"

#include <chrono>
#include <cmath>
#include <condition_variable>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>

namespace mp {

HeightBound height_bound(int ell) {
  if (!is_odd_prime(ell)) fail(Err::InvalidArgument, "l must be an odd prime");
  const long double l = ell, lg = std::log(l);
  HeightBound h;
  h.ell = ell;
  h.B = 6 * l * lg + 16 * l + std::min(2 * l, 14 * std::sqrt(l) * lg) + std::log(2.0L);
  // e^B = 2^t; round t up by a relative 1e-15 and the mantissa up by two ulps of 2^-60
  const long double t = (h.B / std::log(2.0L)) * (1 + 1e-15L) + 1e-12L;
  const long double k = std::floor(t);
  const long double frac = std::exp2(t - k);  // in [1, 2)
  const unsigned long long mant = static_cast<unsigned long long>(std::ceil(std::ldexp(frac, 60))) + 2;
  h.threshold = mpz_class(std::to_string(mant));
  const long shift = static_cast<long>(k) - 60;
  if (shift >= 0) {
    h.threshold <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    mpz_cdiv_q_2exp(h.threshold.get_mpz_t(), h.threshold.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  return h;
}

namespace {

CheckReport bad(const std::string& name, const std::string& detail) { return {false, name, detail}; }

std::string cell(size_t i, size_t j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

}  // namespace

CheckReport check_symmetric(const IntModPoly& phi) {
  for (size_t i = 0; i < phi.dim(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (phi.at(i, j) != phi.at(j, i)) return bad("symmetry", "a" + cell(i, j) + " != a" + cell(j, i));
    }
  }
  return {};
}

CheckReport check_degree(const IntModPoly& phi) {
  const size_t d = phi.dim() - 1;
  bool top = false;
  for (size_t j = 0; j <= d; ++j) top = top || phi.at(d, j) != 0;
  if (!top) return bad("degree", "no monomial of X-degree " + std::to_string(d));
  for (size_t j = 1; j <= d; ++j) {
    if (phi.at(d, j) != 0) return bad("degree", "X^" + std::to_string(d) + " Y^" + std::to_string(j) + " present");
  }
  return {};
}

CheckReport check_monic(const IntModPoly& phi) {
  const size_t d = phi.dim() - 1;
  if (phi.at(d, 0) != 1) return bad("monic", "coefficient of X^" + std::to_string(d) + " is " + phi.at(d, 0).get_str());
  if (phi.at(0, d) != 1) return bad("monic", "coefficient of Y^" + std::to_string(d) + " is " + phi.at(0, d).get_str());
  return {};
}

CheckReport check_kronecker(const IntModPoly& phi) {
  const size_t l = static_cast<size_t>(phi.ell);
  IntModPoly want(phi.ell);
  want.at(l + 1, 0) = 1;
  want.at(0, l + 1) = 1;
  want.at(l, l) = -1;
  want.at(1, 1) = -1;
  const uint64_t L = static_cast<uint64_t>(phi.ell);
  for (size_t i = 0; i < phi.dim(); ++i) {
    for (size_t j = 0; j < phi.dim(); ++j) {
      if (mpz_mod_u64(phi.at(i, j), L) != mpz_mod_u64(want.at(i, j), L)) {
        return bad("kronecker", "a" + cell(i, j) + " differs from (X^l - Y)(X - Y^l) mod l");
      }
    }
  }
  return {};
}

CheckReport check_height(const IntModPoly& phi) {
  const HeightBound hb = height_bound(phi.ell);
  const double h = phi.max_log_height();
  const long double limit = hb.B - std::log(2.0L);
  if (h > limit) {
    return bad("height", "max log|a_ij| = " + std::to_string(h) + " exceeds " + std::to_string(static_cast<double>(limit)));
  }
  return {};
}

CheckReport check_identities(const IntModPoly& phi) {
  if (phi.ell < 3 || !is_odd_prime(phi.ell)) return bad("degree", "l + 1 = " + std::to_string(phi.ell + 1) + " with l not an odd prime");
  for (auto f : {check_symmetric, check_degree, check_monic, check_kronecker, check_height}) {
    CheckReport r = f(phi);
    if (!r.ok) return r;
  }
  return {};
}

namespace {

// Runs the per-prime pipeline on ascending primes with a worker pool. Results
// are consumed strictly in prime order, so the outcome does not depend on the
// thread count.
class PrimeScheduler {
 public:
  PrimeScheduler(int ell, const CrtConfig& cfg) : ell_(ell), cfg_(cfg), params_(find_diamond_parameters(ell)) {
    last_ = cfg.primes_after;
  }

  ~PrimeScheduler() {
    {
      std::lock_guard lk(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& t : workers_) t.join();
  }

  void start() {
    const unsigned n = std::max(1u, cfg_.threads);
    for (unsigned i = 0; i < n; ++i) workers_.emplace_back([this] { work(); });
  }

  // Blocks until the result for the idx-th candidate prime is ready.
  std::pair<uint64_t, std::variant<ModPolyModP, Error>> get(size_t idx) {
    std::unique_lock lk(mu_);
    horizon_ = std::max(horizon_, idx + std::max(1u, cfg_.threads));
    cv_.notify_all();
    done_cv_.wait(lk, [&] { return results_.count(idx) > 0; });
    auto r = std::move(results_.at(idx));
    results_.erase(idx);
    return {primes_[idx], std::move(r)};
  }

 private:
  void work() {
    for (;;) {
      size_t idx;
      uint64_t p;
      {
        std::unique_lock lk(mu_);
        cv_.wait(lk, [&] { return stop_ || next_ < horizon_; });
        if (stop_) return;
        idx = next_++;
        while (primes_.size() <= idx) {
          last_ = next_suitable_prime(params_, last_);
          primes_.push_back(last_);
        }
        p = primes_[idx];
      }
      std::variant<ModPolyModP, Error> out = Error(Err::Ok, "");
      try {
        out = modular_polynomial_modp(ell_, p, params_, cfg_.seed);
      } catch (const Error& e) {
        out = e;
      }
      {
        std::lock_guard lk(mu_);
        results_.emplace(idx, std::move(out));
      }
      done_cv_.notify_all();
    }
  }

  int ell_;
  CrtConfig cfg_;
  DiamondParams params_;
  std::mutex mu_;
  std::condition_variable cv_, done_cv_;
  std::vector<std::thread> workers_;
  std::vector<uint64_t> primes_;
  std::map<size_t, std::variant<ModPolyModP, Error>> results_;
  uint64_t last_ = 0;
  size_t next_ = 0, horizon_ = 0;
  bool stop_ = false;
};

void say(const CrtConfig& cfg, const std::string& msg) {
  if (cfg.log) cfg.log(msg);
}

}  // namespace

std::vector<ModPolyModP> collect_residues(int ell, const CrtConfig& config, CrtStats& stats) {
  const auto t0 = std::chrono::steady_clock::now();
  stats.bound = height_bound(ell);
  stats.modulus = 1;
  std::vector<ModPolyModP> out;
  PrimeScheduler sched(ell, config);
  sched.start();
  for (size_t idx = 0; stats.modulus <= stats.bound.threshold; ++idx) {
    auto [p, res] = sched.get(idx);
    if (auto* e = std::get_if<Error>(&res)) {
      if (!is_recoverable(e->code())) throw *e;
      stats.skipped.push_back({p, e->what()});
      say(config, "skipped p = " + std::to_string(p) + ": " + e->what());
      continue;
    }
    out.push_back(std::move(std::get<ModPolyModP>(res)));
    stats.primes.push_back(p);
    stats.modulus *= static_cast<unsigned long>(p);
    say(config, "p = " + std::to_string(p) + " done (" + std::to_string(mpz_sizeinbase(stats.modulus.get_mpz_t(), 2)) +
                    " of " + std::to_string(mpz_sizeinbase(stats.bound.threshold.get_mpz_t(), 2)) + " bits)");
  }
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

IntModPoly crt_reconstruct(int ell, const std::vector<ModPolyModP>& residues) {
  const size_t dim = static_cast<size_t>(ell + 2);
  ResidueGrid acc(dim);
  for (const auto& r : residues) {
    if (r.ell != ell || r.cells.size() != dim * dim) fail(Err::Structural, "residue grid of the wrong shape");
    crt_combine(acc, r.cells, r.p);
  }
  IntModPoly phi(ell);
  for (size_t i = 0; i < acc.cells.size(); ++i) phi.cells[i] = signed_lift(acc.cells[i], acc.modulus);
  return phi;
}

ModPolyModM explicit_crt_mod(int ell, const std::vector<ModPolyModP>& residues, const mpz_class& m) {
  if (m < 2) fail(Err::InvalidArgument, "modulus must be at least 2");
  const size_t dim = static_cast<size_t>(ell + 2), n = residues.size();
  mpz_class P = 1;
  for (const auto& r : residues) P *= static_cast<unsigned long>(r.p);
  // per prime: (P/p)^-1 mod p and P/p mod m
  std::vector<uint64_t> inv(n);
  std::vector<mpz_class> Mm(n);
  for (size_t i = 0; i < n; ++i) {
    const uint64_t p = residues[i].p;
    mpz_class Mi = P / static_cast<unsigned long>(p), t;
    mpz_class pi(std::to_string(p));
    if (mpz_invert(t.get_mpz_t(), Mi.get_mpz_t(), pi.get_mpz_t()) == 0) fail(Err::InvalidArgument, "repeated prime");
    inv[i] = t.get_ui();
    mpz_fdiv_r(Mm[i].get_mpz_t(), Mi.get_mpz_t(), m.get_mpz_t());
  }
  mpz_class Pm;
  mpz_fdiv_r(Pm.get_mpz_t(), P.get_mpz_t(), m.get_mpz_t());

  ModPolyModM out;
  out.ell = ell;
  out.m = m;
  out.cells.resize(dim * dim);
  using u128 = unsigned __int128;
  for (size_t c = 0; c < dim * dim; ++c) {
    // x = sum c_i P/p_i - r P with r the nearest integer to sum c_i / p_i,
    // the latter kept in 64.64 fixed point
    u128 frac = 0;
    mpz_class acc = 0;
    for (size_t i = 0; i < n; ++i) {
      const uint64_t p = residues[i].p;
      const uint64_t ci = static_cast<uint64_t>(static_cast<u128>(residues[i].cells[c]) * inv[i] % p);
      frac += (static_cast<u128>(ci) << 64) / p;
      acc += Mm[i] * static_cast<unsigned long>(ci);
    }
    const u128 half = u128(1) << 63;
    const uint64_t r = static_cast<uint64_t>((frac + half) >> 64);
    const uint64_t low = static_cast<uint64_t>(frac);
    const uint64_t gap = low > half ? low - static_cast<uint64_t>(half) : static_cast<uint64_t>(half) - low;
    if (gap <= 2 * n + 2) fail(Err::InternalInconsistency, "explicit CRT cannot decide the rounding");
    acc -= Pm * mpz_class(std::to_string(r));
    mpz_fdiv_r(out.cells[c].get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
  }
  return out;
}

namespace {

void enforce(const CheckReport& r) {
  if (!r.ok) fail(Err::InternalInconsistency, "validation failed: " + r.failed + ": " + r.detail);
}

}  // namespace

IntModPoly modular_polynomial(int ell, const CrtConfig& config, CrtStats* stats) {
  CrtStats local;
  CrtStats& st = stats ? *stats : local;
  std::vector<ModPolyModP> res = collect_residues(ell, config, st);
  if (st.modulus <= st.bound.threshold) fail(Err::InternalInconsistency, "prime product does not exceed e^B");
  IntModPoly phi = crt_reconstruct(ell, res);
  st.max_log_height = phi.max_log_height();
  enforce(check_identities(phi));
  return phi;
}

ModPolyModM modular_polynomial_mod_m(int ell, const mpz_class& m, const CrtConfig& config, CrtStats* stats) {
  if (m < 2) fail(Err::InvalidArgument, "modulus must be at least 2");
  CrtStats local;
  CrtStats& st = stats ? *stats : local;
  std::vector<ModPolyModP> res = collect_residues(ell, config, st);
  if (st.modulus <= st.bound.threshold) fail(Err::InternalInconsistency, "prime product does not exceed e^B");
  ModPolyModM out = explicit_crt_mod(ell, res, m);
  for (size_t i = 0; i < out.dim(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (out.at(i, j) != out.at(j, i)) fail(Err::InternalInconsistency, "validation failed: symmetry mod m");
    }
  }
  const size_t d = out.dim() - 1;
  if (out.at(d, 0) != 1 % m || out.at(0, d) != 1 % m) fail(Err::InternalInconsistency, "validation failed: monic mod m");
  return out;
}

}  // namespace mp
