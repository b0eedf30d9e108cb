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

// Exercises the shared library through its C interface only.

#include <cstdio>
#include <cstring>
#include <string>

#include "modpoly/modpoly.h"

namespace {

int failures = 0;

void expect(bool cond, const char* what) {
  if (!cond) {
    std::printf("FAIL %s (%s)\n", what, mp_last_error());
    ++failures;
  }
}

std::string coeff(const mp_poly* p, size_t i, size_t j) {
  char buf[128];
  size_t need = 0;
  if (mp_coefficient(p, i, j, buf, sizeof buf, &need) != MP_OK) return "?";
  return buf;
}

}  // namespace

int main() {
  expect(std::strlen(mp_version()) > 0, "version");
  expect(mp_is_odd_prime(7) && !mp_is_odd_prime(9) && !mp_is_odd_prime(2), "odd prime test");

  int c = 0, n = 0;
  long long a = 0, b = 0;
  expect(mp_parameters(13, &c, &n, &a, &b) == MP_OK && c == 3 && n == 6 && a == 3 && b == 2, "parameters");
  expect(mp_parameters(15, &c, &n, &a, &b) == MP_ERR_INVALID_ARGUMENT, "parameters of a composite");
  uint64_t p = 0;
  expect(mp_next_prime(7, 0, &p) == MP_OK && p == 167, "first prime for l = 7");

  mp_config cfg;
  mp_config_init(&cfg);
  mp_poly* phi = nullptr;
  expect(mp_compute(3, &cfg, &phi) == MP_OK, "compute");
  expect(mp_ell(phi) == 3 && mp_modulus(phi) == nullptr, "shape");
  expect(coeff(phi, 4, 0) == "1" && coeff(phi, 3, 3) == "-1", "monic and X^3 Y^3");
  expect(coeff(phi, 0, 1) == "1855425871872000000000", "constant-in-X coefficient");
  char small[4];
  size_t need = 0;
  expect(mp_coefficient(phi, 0, 1, small, sizeof small, &need) == MP_ERR_INVALID_ARGUMENT && need == 23,
         "buffer size reporting");
  expect(mp_coefficient(phi, 5, 0, small, sizeof small, &need) == MP_ERR_INVALID_ARGUMENT, "range check");
  expect(mp_prime_count(phi) > 0 && mp_skipped_count(phi) > 0, "run statistics");

  int passed = 0;
  char why[256];
  expect(mp_verify(phi, 1, 0, &passed, why, sizeof why) == MP_OK && passed, "verify");

  char* text = nullptr;
  size_t len = 0;
  expect(mp_serialize(phi, MP_FORMAT_JSON, &text, &len) == MP_OK, "json");
  mp_poly* back = nullptr;
  expect(mp_parse(text, len, &back) == MP_OK, "json parse");
  mp_string_free(text);
  char *f1 = nullptr, *f2 = nullptr;
  expect(mp_serialize(phi, MP_FORMAT_FLAT, &f1, nullptr) == MP_OK &&
             mp_serialize(back, MP_FORMAT_FLAT, &f2, nullptr) == MP_OK && std::strcmp(f1, f2) == 0,
         "round trip");
  mp_string_free(f1);
  mp_string_free(f2);
  mp_free(back);

  mp_poly* m = nullptr;
  expect(mp_compute_mod(3, "1000000007", &cfg, &m) == MP_OK, "compute mod m");
  expect(std::string(mp_modulus(m)) == "1000000007", "modulus");
  expect(coeff(m, 0, 1) == "18987812", "mod m coefficient");
  expect(mp_verify(m, 0, 0, &passed, why, sizeof why) == MP_ERR_INVALID_ARGUMENT, "verify needs Z");
  mp_free(m);
  mp_free(phi);

  mp_poly *d = nullptr, *q = nullptr;
  expect(mp_compute_modp(7, 167, 0, 0, &d) == MP_OK && mp_compute_modp(7, 167, 0, 1, &q) == MP_OK, "modp");
  expect(coeff(d, 8, 0) == "1" && coeff(d, 3, 5) == coeff(q, 3, 5), "diamond and direct agree");
  mp_free(d);
  mp_free(q);

  expect(mp_compute(4, &cfg, &phi) == MP_ERR_INVALID_ARGUMENT, "l = 4 rejected");
  expect(std::strlen(mp_last_error()) > 0, "error message");
  expect(mp_compute_mod(3, "1", &cfg, &phi) == MP_ERR_INVALID_ARGUMENT, "m = 1 rejected");
  expect(mp_parse("1 2", 3, &phi) == MP_ERR_PARSE, "parse error");
  expect(mp_read("/nonexistent/file", &phi) == MP_ERR_IO, "io error");
  expect(std::string(mp_status_name(MP_ERR_SKIPPED_PRIME)) == "SkippedPrime", "status names");

  std::printf(failures ? "capi smoke: %d failures\n" : "capi smoke: ok\n", failures);
  return failures ? 1 : 0;
}
