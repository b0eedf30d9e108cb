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

// modpoly: compute, verify and export classical modular polynomials.
//
// Exit status: 0 on success, 1 on usage, parse or verification failure,
// 2 when the computation itself reports an internal inconsistency.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modpoly/modpoly.h"

namespace {

constexpr int kOk = 0, kFail = 1, kInternal = 2;

struct Options {
  long long ell = 0;
  std::string mod;
  std::string format = "flat";
  std::string out;
  std::string file;
  uint64_t seed = 0;
  unsigned threads = 1;
  bool verbose = false;
  bool direct = false;
  bool no_spot = false;
};

unsigned default_threads() {
  const char* env = std::getenv("MODPOLY_THREADS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  return (*end == '\0' && v > 0 && v <= 1024) ? static_cast<unsigned>(v) : 1;
}

void log_stderr(const char* msg, void*) { std::fprintf(stderr, "modpoly: %s\n", msg); }

int report(mp_status s) {
  std::fprintf(stderr, "modpoly: %s\n", mp_last_error());
  switch (s) {
    case MP_ERR_INTERNAL_INCONSISTENCY:
    case MP_ERR_CONVERGENCE_FAILURE:
    case MP_ERR_COEFFICIENT_NOT_RATIONAL:
    case MP_ERR_UNKNOWN:
      return kInternal;
    default:
      return kFail;
  }
}

int usage(const std::string& msg) {
  std::fprintf(stderr, "modpoly: %s\n", msg.c_str());
  return kFail;
}

int emit(const mp_poly* poly, const Options& o) {
  char* text = nullptr;
  size_t len = 0;
  mp_status s = mp_serialize(poly, o.format == "json" ? MP_FORMAT_JSON : MP_FORMAT_FLAT, &text, &len);
  if (s != MP_OK) return report(s);
  bool ok;
  if (o.out.empty() || o.out == "-") {
    ok = std::fwrite(text, 1, len, stdout) == len && std::fflush(stdout) == 0;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    ok = static_cast<bool>(f.write(text, static_cast<std::streamsize>(len)));
  }
  mp_string_free(text);
  if (!ok) return usage("cannot write " + (o.out.empty() ? std::string("standard output") : o.out));
  return kOk;
}

void summary(const mp_poly* poly, int ell) {
  std::fprintf(stderr, "modpoly: l = %d, %zu primes", ell, mp_prime_count(poly));
  if (mp_prime_count(poly)) {
    std::fprintf(stderr, " (%llu .. %llu)", static_cast<unsigned long long>(mp_prime_at(poly, 0)),
                 static_cast<unsigned long long>(mp_prime_at(poly, mp_prime_count(poly) - 1)));
  }
  std::fprintf(stderr, ", %zu skipped", mp_skipped_count(poly));
  for (size_t k = 0; k < mp_skipped_count(poly); ++k) {
    std::fprintf(stderr, "%s%llu", k ? " " : " [", static_cast<unsigned long long>(mp_skipped_at(poly, k)));
  }
  if (mp_skipped_count(poly)) std::fprintf(stderr, "]");
  std::fprintf(stderr, ", %.2f s", mp_seconds(poly));
  if (!mp_modulus(poly)) {
    std::fprintf(stderr, ", max log|a| = %.2f, bound B - log 2 = %.2f", mp_max_log_height(poly),
                 mp_height_bound(ell) - 0.6931471805599453);
  }
  std::fprintf(stderr, "\n");
}

int check_ell(const Options& o) {
  if (!mp_is_odd_prime(o.ell)) return usage("--ell " + std::to_string(o.ell) + " is not an odd prime");
  if (o.ell > 1000) return usage("--ell above 1000 is not supported");
  return kOk;
}

int cmd_compute(const Options& o) {
  if (int rc = check_ell(o)) return rc;
  mp_config cfg;
  mp_config_init(&cfg);
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  if (o.verbose) cfg.log = log_stderr;
  mp_poly* poly = nullptr;
  mp_status s = o.mod.empty() ? mp_compute(static_cast<int>(o.ell), &cfg, &poly)
                              : mp_compute_mod(static_cast<int>(o.ell), o.mod.c_str(), &cfg, &poly);
  if (s != MP_OK) return report(s);
  summary(poly, static_cast<int>(o.ell));
  int rc = emit(poly, o);
  mp_free(poly);
  return rc;
}

int cmd_modp(const Options& o) {
  if (int rc = check_ell(o)) return rc;
  uint64_t p = 0;
  if (!o.mod.empty()) {
    char* end = nullptr;
    p = std::strtoull(o.mod.c_str(), &end, 10);
    if (*end != '\0' || p == 0) return usage("--mod must be a prime for modp");
  }
  mp_poly* poly = nullptr;
  mp_status s = mp_compute_modp(static_cast<int>(o.ell), p, o.seed, o.direct ? 1 : 0, &poly);
  if (s != MP_OK) return report(s);
  if (o.verbose) std::fprintf(stderr, "modpoly: l = %lld mod p = %s\n", o.ell, mp_modulus(poly));
  int rc = emit(poly, o);
  mp_free(poly);
  return rc;
}

int cmd_verify(const Options& o) {
  mp_poly* poly = nullptr;
  mp_status s = mp_read(o.file.c_str(), &poly);
  if (s != MP_OK) return report(s);
  int passed = 0;
  char why[512];
  s = mp_verify(poly, o.no_spot ? 0 : 1, o.seed, &passed, why, sizeof why);
  const int ell = mp_ell(poly);
  mp_free(poly);
  if (s != MP_OK) return report(s);
  if (!passed) {
    std::fprintf(stderr, "modpoly: verification failed: %s\n", why);
    return kFail;
  }
  std::fprintf(stderr, "modpoly: %s is Phi_%d: all checks passed\n", o.file.c_str(), ell);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.threads = default_threads();
  CLI::App app{"Classical modular polynomials Phi_l(X, Y)", "modpoly"};
  app.set_version_flag("--version", std::string(mp_version()));
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed (results do not depend on it)");
    sub->add_flag("-v,--verbose", o.verbose, "Progress on standard error");
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"flat", "json"}));
    sub->add_option("-o,--out", o.out, "Output file (default: standard output)");
  };

  CLI::App* compute = app.add_subcommand("compute", "Compute Phi_l over Z, or mod m with --mod");
  compute->add_option("-l,--ell", o.ell, "Odd prime l")->required();
  compute->add_option("--mod", o.mod, "Reduce modulo this integer m >= 2");
  compute->add_option("--threads", o.threads, "Worker threads (default: $MODPOLY_THREADS or 1)")
      ->check(CLI::Range(1u, 1024u));
  output(compute);
  common(compute);

  CLI::App* modp = app.add_subcommand("modp", "Compute Phi_l mod one suitable prime");
  modp->add_option("-l,--ell", o.ell, "Odd prime l")->required();
  modp->add_option("--mod", o.mod, "The prime p (default: the first usable one)");
  modp->add_flag("--direct", o.direct, "Lift each isogeny directly instead of through isogeny diamonds");
  output(modp);
  common(modp);

  CLI::App* verify = app.add_subcommand("verify", "Check a coefficient grid over Z");
  verify->add_option("file", o.file, "Flat or json grid")->required();
  verify->add_flag("--no-spot-check", o.no_spot, "Skip the comparison against a fresh prime");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFail;
  }

  if (compute->parsed()) return cmd_compute(o);
  if (modp->parsed()) return cmd_modp(o);
  return cmd_verify(o);
}
