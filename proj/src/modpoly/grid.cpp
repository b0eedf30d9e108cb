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

#include "modpoly/grid.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace mp {

ModPolyModP IntModPoly::reduce(uint64_t p) const {
  ModPolyModP out;
  out.ell = ell;
  out.p = p;
  out.cells.reserve(cells.size());
  for (const auto& c : cells) out.cells.push_back(mpz_mod_u64(c, p));
  return out;
}

double IntModPoly::max_log_height() const {
  double h = 0;
  for (const auto& c : cells) {
    if (c == 0) continue;
    signed long e = 0;
    double d = mpz_get_d_2exp(&e, c.get_mpz_t());
    h = std::max(h, std::log(std::fabs(d)) + static_cast<double>(e) * std::log(2.0));
  }
  return h;
}

ModPolyModM reduce_mod(const IntModPoly& phi, const mpz_class& m) {
  if (m < 2) fail(Err::InvalidArgument, "modulus must be at least 2");
  ModPolyModM out;
  out.ell = phi.ell;
  out.m = m;
  out.cells.reserve(phi.cells.size());
  for (const auto& c : phi.cells) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    out.cells.push_back(r);
  }
  return out;
}

namespace {

template <typename Grid>
void write_cells(std::ostream& out, const Grid& g) {
  const size_t d = g.dim();
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) {
      const mpz_class& c = g.cells[i * d + j];
      if (c != 0) out << i << ' ' << j << ' ' << c.get_str() << '\n';
    }
  }
}

[[noreturn]] void parse_fail(size_t line, const std::string& why) {
  fail(Err::ParseError, "line " + std::to_string(line) + ": " + why);
}

bool parse_index(const std::string& s, size_t& v) {
  if (s.empty() || s.size() > 6) return false;
  v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
    v = v * 10 + static_cast<size_t>(ch - '0');
  }
  return true;
}

bool parse_integer(const std::string& s, mpz_class& v) {
  size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k == s.size()) return false;
  for (size_t i = k; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return v.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
}

struct Term {
  size_t i, j;
  mpz_class c;
};

IntModPoly from_terms(const std::vector<Term>& terms) {
  if (terms.empty()) fail(Err::ParseError, "no coefficients");
  size_t top = 0;
  for (const auto& t : terms) top = std::max({top, t.i, t.j});
  if (top < 2) fail(Err::ParseError, "degree too small for a modular polynomial");
  IntModPoly phi(static_cast<int>(top) - 1);
  std::vector<bool> seen(phi.cells.size());
  for (const auto& t : terms) {
    size_t idx = t.i * phi.dim() + t.j;
    if (seen[idx]) fail(Err::ParseError, "duplicate monomial " + std::to_string(t.i) + " " + std::to_string(t.j));
    seen[idx] = true;
    phi.cells[idx] = t.c;
  }
  return phi;
}

}  // namespace

void write_flat(std::ostream& out, const IntModPoly& phi) { write_cells(out, phi); }
void write_flat(std::ostream& out, const ModPolyModM& phi) { write_cells(out, phi); }

IntModPoly read_flat(std::istream& in) {
  std::vector<Term> terms;
  std::string line;
  size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string a, b, c, extra;
    if (!(ls >> a >> b >> c) || (ls >> extra)) parse_fail(no, "expected \"i j c\"");
    Term t;
    if (!parse_index(a, t.i) || !parse_index(b, t.j)) parse_fail(no, "bad exponent");
    if (!parse_integer(c, t.c)) parse_fail(no, "bad coefficient");
    if (t.c != 0) terms.push_back(std::move(t));
  }
  return from_terms(terms);
}

namespace {

template <typename Grid>
nlohmann::ordered_json json_body(const Grid& g, const JsonMeta& meta) {
  nlohmann::ordered_json j;
  j["ell"] = g.ell;
  j["version"] = MODPOLY_VERSION;
  j["seed"] = meta.seed;
  j["primes"] = meta.primes;
  j["skipped_primes"] = meta.skipped;
  auto terms = nlohmann::ordered_json::array();
  const size_t d = g.dim();
  for (size_t i = 0; i < d; ++i) {
    for (size_t k = 0; k < d; ++k) {
      const mpz_class& c = g.cells[i * d + k];
      if (c != 0) terms.push_back({i, k, c.get_str()});
    }
  }
  j["coefficients"] = terms;
  return j;
}

}  // namespace

std::string to_json(const IntModPoly& phi, const JsonMeta& meta) {
  auto j = json_body(phi, meta);
  j["modulus"] = nullptr;
  return j.dump(1) + "\n";
}

std::string to_json(const ModPolyModM& phi, const JsonMeta& meta) {
  auto j = json_body(phi, meta);
  j["modulus"] = phi.m.get_str();
  return j.dump(1) + "\n";
}

IntModPoly int_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array()) {
    fail(Err::ParseError, "json: missing coefficient list");
  }
  if (j.contains("modulus") && !j["modulus"].is_null()) fail(Err::ParseError, "json: grid is reduced mod m");
  std::vector<Term> terms;
  size_t no = 0;
  for (const auto& t : j["coefficients"]) {
    ++no;
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
        !t[2].is_string()) {
      parse_fail(no, "expected [i, j, \"c\"]");
    }
    Term term{t[0].get<size_t>(), t[1].get<size_t>(), 0};
    if (!parse_integer(t[2].get<std::string>(), term.c)) parse_fail(no, "bad coefficient");
    if (term.c != 0) terms.push_back(std::move(term));
  }
  IntModPoly phi = from_terms(terms);
  if (j.contains("ell") && j["ell"] != phi.ell) fail(Err::ParseError, "json: ell does not match the coefficients");
  return phi;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    fail(Err::InternalInconsistency, "sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

}  // namespace mp
