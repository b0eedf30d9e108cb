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

// Acceptance run: one PASS/FAIL line per criterion. Criteria 6 and 8 are
// reported only; the exit status reflects the others.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "crt/crt.hpp"
#include "oracle/oracle.hpp"

using namespace mp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void note(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

bool hard_failure = false;

void line(int k, const char* title, const Outcome& o, bool asserted = true) {
  std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", k, title, o.detail.c_str());
  std::fflush(stdout);
  if (asserted && !o.pass) hard_failure = true;
}

Outcome guarded(const std::function<void(Outcome&)>& f) {
  Outcome o;
  try {
    f(o);
  } catch (const std::exception& e) {
    o.note(false, std::string("threw ") + e.what());
  }
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Artin random_artin(Rng& rng, size_t prec) {
  Artin a(prec);
  for (size_t i = 0; i < prec; ++i) a[i] = random_fp2(rng);
  return a;
}

// Every computed Phi_l, kept for the height and identity criteria.
std::map<int, std::pair<IntModPoly, CrtStats>> computed;
std::map<int, double> wall;

const IntModPoly& compute(int ell) {
  auto it = computed.find(ell);
  if (it == computed.end()) {
    CrtConfig cfg;
    CrtStats st;
    auto t0 = std::chrono::steady_clock::now();
    IntModPoly phi = modular_polynomial(ell, cfg, &st);
    wall[ell] = seconds_since(t0);
    it = computed.emplace(ell, std::make_pair(std::move(phi), st)).first;
  }
  return it->second.first;
}

// First `count` suitable primes for which the per-prime pipeline runs.
std::vector<uint64_t> usable_primes(int ell, size_t count, std::vector<uint64_t>& skipped) {
  DiamondParams d = find_diamond_parameters(ell);
  std::vector<uint64_t> out;
  for (uint64_t p = 0; out.size() < count;) {
    p = next_suitable_prime(d, p);
    try {
      modular_polynomial_modp(ell, p, d, 0);
      out.push_back(p);
    } catch (const Error& e) {
      if (!is_recoverable(e.code())) throw;
      skipped.push_back(p);
    }
  }
  return out;
}

}  // namespace

int main() {
  std::printf("acceptance run, modpoly %s\n", MODPOLY_VERSION);

  // 1. exactness on the pinned tables
  line(1, "exact Phi_l for l in {3, 5, 7, 11, 13}", guarded([](Outcome& o) {
         std::ostringstream d;
         for (int ell : {3, 5, 7, 11, 13}) {
           const IntModPoly& phi = compute(ell);
           o.note(phi == load_reference(ell).phi, "l = " + std::to_string(ell) + " differs from the table");
           char buf[64];
           std::snprintf(buf, sizeof buf, "%sl=%d %.1fs", ell == 3 ? "" : ", ", ell, wall[ell]);
           d << buf;
         }
         if (o.pass) o.detail = d.str();
       }));

  // 2. diamond pipeline = direct lift, cell for cell
  line(2, "modular_polynomial_modp = modp_direct", guarded([](Outcome& o) {
         size_t cases = 0;
         std::ostringstream skipped_note;
         for (int ell : {3, 7, 11, 19}) {
           std::vector<uint64_t> skipped;
           for (uint64_t p : usable_primes(ell, 3, skipped)) {
             DiamondParams d = find_diamond_parameters(ell);
             ModPolyModP a = modular_polynomial_modp(ell, p, d, 0);
             ModPolyModP b = modp_direct(ell, p, 0);
             o.note(a == b, "l = " + std::to_string(ell) + ", p = " + std::to_string(p));
             ++cases;
           }
           for (uint64_t p : skipped) skipped_note << " " << ell << "/" << p;
         }
         if (o.pass) {
           o.detail = std::to_string(cases) + " (l, p) pairs equal";
           if (!skipped_note.str().empty()) o.detail += "; skipped l/p:" + skipped_note.str();
         }
       }));

  // 6 runs before 3 and 4 so that l = 19 and 23 are covered there as well
  Outcome timing = guarded([](Outcome& o) {
    for (int ell : {7, 11, 19, 23}) compute(ell);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = 4;
    for (int ell : {7, 11, 19, 23}) {
      double x = std::log(static_cast<double>(ell)), y = std::log(wall[ell]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double delta = slope - 3;
    char buf[160];
    std::snprintf(buf, sizeof buf, "t = c l^(3 + %.2f) over l = 7, 11, 19, 23 (%.1f, %.1f, %.1f, %.1f s); need < 0.8",
                  delta, wall[7], wall[11], wall[19], wall[23]);
    o.detail = buf;
    o.note(delta < 0.8, buf);
  });

  line(3, "height bound and CRT termination", guarded([](Outcome& o) {
         double worst = -1e9;
         int worst_l = 0;
         for (auto& [ell, entry] : computed) {
           auto& [phi, st] = entry;
           const double slack = static_cast<double>(st.bound.B - std::log(2.0L)) - phi.max_log_height();
           o.note(slack >= 0, "l = " + std::to_string(ell) + " exceeds B - log 2");
           o.note(st.modulus > st.bound.threshold, "l = " + std::to_string(ell) + ": prime product <= e^B");
           if (worst_l == 0 || slack < worst) {
             worst = slack;
             worst_l = ell;
           }
         }
         if (o.pass) {
           char buf[128];
           std::snprintf(buf, sizeof buf, "%zu polynomials, smallest slack %.1f (l = %d), P > e^B for all",
                         computed.size(), worst, worst_l);
           o.detail = buf;
         }
       }));

  line(4, "symmetry, monicity, degree, Kronecker congruence", guarded([](Outcome& o) {
         for (auto& [ell, entry] : computed) {
           const IntModPoly& phi = entry.first;
           for (auto f : {check_symmetric, check_degree, check_monic, check_kronecker}) {
             CheckReport r = f(phi);
             o.note(r.ok, "l = " + std::to_string(ell) + ": " + r.failed + ": " + r.detail);
           }
         }
         if (o.pass) o.detail = "l = 3, 5, 7, 11, 13, 19, 23";
       }));

  // 5. deformation properties
  line(5, "deformation properties", guarded([](Outcome& o) {
         size_t lifts = 0, torsion = 0, functorial = 0, rounds = 0;
         {
           FieldScope fs(1009);
           Rng rng(20261017);
           for (size_t prec : {2, 5, 9, 17}) {
             for (int done = 0; done < 200;) {
               std::vector<Artin> c;
               for (int i = 0; i <= 4; ++i) c.push_back(random_artin(rng, prec));
               RPoly g(c);
               Fp2 alpha = random_fp2(rng);
               g.c[0] = g.c[0] - Artin(eval(reduce(g), alpha), prec);
               if (eval(deriv(reduce(g)), alpha).is_zero()) continue;
               Artin r = newton_lift(alpha, g);
               o.note(eval(g, r).is_zero() && r.residue() == alpha, "newton_lift at precision " + std::to_string(prec));
               ++done;
               ++lifts;
             }
             // ring operations commute with reduction
             for (int t = 0; t < 50; ++t) {
               Artin a = random_artin(rng, prec), b = random_artin(rng, prec);
               o.note((a * b).residue() == a.residue() * b.residue(), "product mod eps");
               o.note((a + b).residue() == a.residue() + b.residue(), "sum mod eps");
               o.note((a - b).residue() == a.residue() - b.residue(), "difference mod eps");
               if (!a.residue().is_zero()) o.note(a.inv().residue() == a.residue().inv(), "inverse mod eps");
               functorial += 4;
             }
           }
         }
         for (uint64_t p : {167ull, 1231ull}) {
           FieldScope fs(p);
           Rng rng(p);
           CurveF E = e0_curve();
           const size_t prec = 9;
           CurveR ER = curve_from_j_anchored(E, Artin(j_invariant(E), prec) + Artin::eps(prec));
           o.note(reduce(ER) == E && j_invariant(ER).residue() == j_invariant(E), "curve deformation mod eps");
           for (int N : {p == 167 ? 3 : 11, 7}) {
             auto [P, Q] = torsion_basis(E, static_cast<uint64_t>(N), rng);
             PointR PR = lift_point(E, P, ER, N), QR = lift_point(E, Q, ER, N);
             o.note(mul(ER, PR, static_cast<Scalar>(N)).inf && mul(ER, QR, static_cast<Scalar>(N)).inf,
                    "lifted point is not N-torsion");
             o.note(reduce(PR) == P && on_curve(ER, PR), "lift_point mod eps");
             torsion += 2;
             PointR S = add(ER, PR, QR);
             o.note(reduce(S) == add(E, P, Q), "addition mod eps");
             o.note(reduce(mul(ER, S, 5)) == mul(E, add(E, P, Q), 5), "multiplication mod eps");
             auto phiR = velu(ER, PR, N);
             auto phi = velu(E, P, N);
             o.note(reduce(phiR.cod) == phi.cod && reduce(phiR(QR)) == phi(Q), "Velu mod eps");
             o.note(reduce(division_polynomial(ER, N)) == division_polynomial(E, N), "division polynomial mod eps");
             functorial += 4;
           }
         }
         // convergence certificate on l = 7 runs
         DiamondParams d = find_diamond_parameters(7);
         std::vector<uint64_t> skipped;
         for (uint64_t p : usable_primes(7, 3, skipped)) {
           ModpDiagnostics diag;
           modular_polynomial_modp(7, p, d, 0, &diag);
           for (const LiftResult& lr : diag.lifts) {
             const size_t full = 9;
             // defect_valuations[r] is the valuation after round r, measured
             // at that round's working precision; the last entry is at full precision
             for (size_t r = 1; r < lr.defect_valuations.size(); ++r) {
               const size_t want = std::min<size_t>(size_t(1) << r, full);
               const size_t have = lr.defect_valuations[r];
               o.note(have >= std::min(want, r < lr.round_precisions.size() ? lr.round_precisions[r] : full),
                      "certificate, p = " + std::to_string(p) + ", round " + std::to_string(r));
               ++rounds;
             }
             o.note(lr.defect_valuations.back() >= full, "final defect nonzero, p = " + std::to_string(p));
           }
         }
         if (o.pass) {
           o.detail = std::to_string(lifts) + " Newton lifts, " + std::to_string(torsion) + " torsion lifts, " +
                      std::to_string(functorial) + " reduction checks, " + std::to_string(rounds) +
                      " certified rounds";
         }
       }));

  line(6, "scaling (reported)", timing, false);

  line(7, "mod m agrees with Phi_l mod m", guarded([](Outcome& o) {
         for (int ell : {3, 7}) {
           for (const char* m : {"2", "101", "1000000007"}) {
             mpz_class M(m);
             CrtConfig cfg;
             o.note(modular_polynomial_mod_m(ell, M, cfg) == reduce_mod(compute(ell), M),
                    "l = " + std::to_string(ell) + ", m = " + m);
           }
         }
         if (o.pass) o.detail = "l = 3, 7; m = 2, 101, 10^9 + 7";
       }));

  line(8, "diamond parameters for every prime l < 200 (reported)", guarded([](Outcome& o) {
         int count = 0, maxn = 0, at = 0;
         for (int ell = 3; ell < 200; ell += 2) {
           if (!is_odd_prime(ell)) continue;
           try {
             DiamondParams d = find_diamond_parameters(ell);
             const long long lhs = (1LL << d.n) - static_cast<long long>(d.c) * ell;
             o.note(lhs == d.a * d.a + 4 * d.b * d.b, "identity fails for l = " + std::to_string(ell));
             o.note(d.n <= parameter_cap(ell), "n above the cap for l = " + std::to_string(ell));
             o.note(d.c == (ell % 4 == 3 ? 1 : 3), "wrong c for l = " + std::to_string(ell));
             if (d.n > maxn) {
               maxn = d.n;
               at = ell;
             }
           } catch (const Error& e) {
             o.note(false, "l = " + std::to_string(ell) + ": " + e.what());
           }
           ++count;
         }
         if (o.pass) {
           o.detail = std::to_string(count) + " primes, largest n = " + std::to_string(maxn) + " (l = " +
                      std::to_string(at) + ")";
         }
       }),
       false);

  std::printf(hard_failure ? "acceptance: FAILED\n" : "acceptance: all asserted criteria passed\n");
  return hard_failure ? 1 : 0;
}
