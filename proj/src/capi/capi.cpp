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

#include "modpoly/modpoly.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>

#include "crt/crt.hpp"
#include "oracle/oracle.hpp"

struct mp_poly {
  std::optional<mp::IntModPoly> z;
  std::optional<mp::ModPolyModM> mod;
  std::string modulus;
  mp::CrtStats stats;
  uint64_t seed = 0;
};

namespace {

thread_local std::string last_error;

template <typename F>
mp_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return MP_OK;
  } catch (const mp::Error& e) {
    last_error = e.what();
    return static_cast<mp_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MP_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MP_ERR_UNKNOWN;
  }
}

mp::CrtConfig to_config(const mp_config* cfg) {
  mp::CrtConfig c;
  if (!cfg) return c;
  c.seed = cfg->seed;
  c.threads = cfg->threads ? cfg->threads : 1;
  c.primes_after = cfg->primes_after;
  if (cfg->log) {
    mp_log_fn fn = cfg->log;
    void* user = cfg->log_user;
    c.log = [fn, user](const std::string& m) { fn(m.c_str(), user); };
  }
  return c;
}

void need(bool ok, const char* what) {
  if (!ok) mp::fail(mp::Err::InvalidArgument, what);
}

void need_ell(int ell) { need(mp::is_odd_prime(ell), "l must be an odd prime"); }

mp_poly* from_modp(const mp::ModPolyModP& g) {
  auto* out = new mp_poly;
  mp::ModPolyModM m;
  m.ell = g.ell;
  m.m = static_cast<unsigned long>(g.p);
  for (uint64_t c : g.cells) m.cells.emplace_back(static_cast<unsigned long>(c));
  out->modulus = m.m.get_str();
  out->mod = std::move(m);
  out->stats.primes = {g.p};
  return out;
}

mp::JsonMeta meta_of(const mp_poly* p) {
  mp::JsonMeta meta;
  meta.seed = p->seed;
  meta.primes = p->stats.primes;
  for (const auto& s : p->stats.skipped) meta.skipped.push_back(s.p);
  return meta;
}

mp::IntModPoly parse_any(const std::string& text) {
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') return mp::int_from_json(text);
  std::istringstream in(text);
  return mp::read_flat(in);
}

// First suitable prime above `after` for which the per-prime pipeline runs.
mp::ModPolyModP first_usable(int ell, uint64_t after, uint64_t seed, bool direct) {
  mp::DiamondParams d = mp::find_diamond_parameters(ell);
  uint64_t p = after;
  for (int tries = 0; tries < 64; ++tries) {
    p = mp::next_suitable_prime(d, p);
    try {
      return direct ? mp::modp_direct(ell, p, seed) : mp::modular_polynomial_modp(ell, p, d, seed);
    } catch (const mp::Error& e) {
      if (!mp::is_recoverable(e.code())) throw;
    }
  }
  mp::fail(mp::Err::SkippedPrime, "no usable prime among 64 candidates");
}

}  // namespace

extern "C" {

void mp_config_init(mp_config* cfg) {
  if (!cfg) return;
  std::memset(cfg, 0, sizeof *cfg);
  cfg->threads = 1;
}

const char* mp_version(void) { return MODPOLY_VERSION; }

const char* mp_status_name(mp_status s) {
  if (s == MP_ERR_OUT_OF_MEMORY) return "OutOfMemory";
  if (s == MP_ERR_UNKNOWN) return "Unknown";
  if (s < 0 || s > MP_ERR_SKIPPED_PRIME) return "Unknown";
  return mp::err_name(static_cast<mp::Err>(s));
}

const char* mp_last_error(void) { return last_error.c_str(); }

int mp_is_odd_prime(long long ell) { return mp::is_odd_prime(ell) ? 1 : 0; }

mp_status mp_parameters(int ell, int* c, int* n, long long* a, long long* b) {
  return guarded([&] {
    mp::DiamondParams d = mp::find_diamond_parameters(ell);
    if (c) *c = d.c;
    if (n) *n = d.n;
    if (a) *a = d.a;
    if (b) *b = d.b;
  });
}

mp_status mp_next_prime(int ell, uint64_t after, uint64_t* p) {
  return guarded([&] {
    need(p != nullptr, "null output");
    *p = mp::next_suitable_prime(mp::find_diamond_parameters(ell), after);
  });
}

mp_status mp_compute(int ell, const mp_config* cfg, mp_poly** out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    need_ell(ell);
    auto* res = new mp_poly;
    try {
      res->z = mp::modular_polynomial(ell, to_config(cfg), &res->stats);
    } catch (...) {
      delete res;
      throw;
    }
    res->seed = cfg ? cfg->seed : 0;
    *out = res;
  });
}

mp_status mp_compute_mod(int ell, const char* m, const mp_config* cfg, mp_poly** out) {
  return guarded([&] {
    need(out != nullptr && m != nullptr, "null argument");
    need_ell(ell);
    mpz_class M;
    need(M.set_str(m, 10) == 0 && M >= 2, "modulus must be an integer >= 2");
    auto* res = new mp_poly;
    try {
      res->mod = mp::modular_polynomial_mod_m(ell, M, to_config(cfg), &res->stats);
    } catch (...) {
      delete res;
      throw;
    }
    res->modulus = M.get_str();
    res->seed = cfg ? cfg->seed : 0;
    *out = res;
  });
}

mp_status mp_compute_modp(int ell, uint64_t p, uint64_t seed, int direct, mp_poly** out) {
  return guarded([&] {
    need(out != nullptr, "null output");
    need_ell(ell);
    mp::ModPolyModP g;
    if (p == 0) {
      g = first_usable(ell, 0, seed, direct != 0);
    } else if (direct) {
      g = mp::modp_direct(ell, p, seed);
    } else {
      g = mp::modular_polynomial_modp(ell, p, mp::find_diamond_parameters(ell), seed);
    }
    *out = from_modp(g);
    (*out)->seed = seed;
  });
}

mp_status mp_read(const char* path, mp_poly** out) {
  return guarded([&] {
    need(path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) mp::fail(mp::Err::IoError, std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto* res = new mp_poly;
    try {
      res->z = parse_any(buf.str());
    } catch (...) {
      delete res;
      throw;
    }
    *out = res;
  });
}

mp_status mp_parse(const char* text, size_t len, mp_poly** out) {
  return guarded([&] {
    need(text != nullptr && out != nullptr, "null argument");
    auto* res = new mp_poly;
    try {
      res->z = parse_any(std::string(text, len));
    } catch (...) {
      delete res;
      throw;
    }
    *out = res;
  });
}

mp_status mp_serialize(const mp_poly* poly, mp_format fmt, char** text, size_t* len) {
  return guarded([&] {
    need(poly != nullptr && text != nullptr, "null argument");
    need(fmt == MP_FORMAT_FLAT || fmt == MP_FORMAT_JSON, "unknown format");
    std::string s;
    if (fmt == MP_FORMAT_JSON) {
      s = poly->z ? mp::to_json(*poly->z, meta_of(poly)) : mp::to_json(*poly->mod, meta_of(poly));
    } else {
      std::ostringstream o;
      if (poly->z) {
        mp::write_flat(o, *poly->z);
      } else {
        mp::write_flat(o, *poly->mod);
      }
      s = o.str();
    }
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
    *text = buf;
    if (len) *len = s.size();
  });
}

void mp_string_free(char* text) { std::free(text); }

void mp_free(mp_poly* poly) { delete poly; }

int mp_ell(const mp_poly* poly) {
  if (!poly) return 0;
  return poly->z ? poly->z->ell : poly->mod->ell;
}

const char* mp_modulus(const mp_poly* poly) { return poly && poly->mod ? poly->modulus.c_str() : nullptr; }

mp_status mp_coefficient(const mp_poly* poly, size_t i, size_t j, char* buf, size_t len, size_t* needed) {
  return guarded([&] {
    need(poly != nullptr, "null poly");
    const size_t d = static_cast<size_t>(mp_ell(poly) + 2);
    need(i < d && j < d, "exponent out of range");
    const std::string s = poly->z ? poly->z->at(i, j).get_str() : poly->mod->at(i, j).get_str();
    if (needed) *needed = s.size() + 1;
    need(buf != nullptr && len > s.size(), "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

size_t mp_prime_count(const mp_poly* poly) { return poly ? poly->stats.primes.size() : 0; }
uint64_t mp_prime_at(const mp_poly* poly, size_t k) {
  return poly && k < poly->stats.primes.size() ? poly->stats.primes[k] : 0;
}
size_t mp_skipped_count(const mp_poly* poly) { return poly ? poly->stats.skipped.size() : 0; }
uint64_t mp_skipped_at(const mp_poly* poly, size_t k) {
  return poly && k < poly->stats.skipped.size() ? poly->stats.skipped[k].p : 0;
}
double mp_seconds(const mp_poly* poly) { return poly ? poly->stats.seconds : 0; }
double mp_max_log_height(const mp_poly* poly) {
  if (!poly) return 0;
  return poly->z ? poly->z->max_log_height() : 0;
}

double mp_height_bound(int ell) {
  if (!mp::is_odd_prime(ell)) return 0;
  return static_cast<double>(mp::height_bound(ell).B);
}

mp_status mp_verify(const mp_poly* poly, int spot_check, uint64_t seed, int* passed, char* failed, size_t len) {
  return guarded([&] {
    need(poly != nullptr && passed != nullptr, "null argument");
    need(poly->z.has_value(), "only grids over Z can be verified");
    const mp::IntModPoly& phi = *poly->z;
    mp::CheckReport r = mp::check_identities(phi);
    if (r.ok && spot_check) {
      // a prime well above the ones a full computation starts with
      mp::ModPolyModP fresh = first_usable(phi.ell, uint64_t(1) << 40, seed, false);
      if (!(fresh == phi.reduce(fresh.p))) {
        r = {false, "spot-prime", "disagrees with phi mod " + std::to_string(fresh.p)};
      }
    }
    *passed = r.ok ? 1 : 0;
    if (failed && len) {
      std::string s = r.ok ? "" : r.failed + ": " + r.detail;
      std::strncpy(failed, s.c_str(), len - 1);
      failed[len - 1] = '\0';
    }
  });
}

}  // extern "C"
