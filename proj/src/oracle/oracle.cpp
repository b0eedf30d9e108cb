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

#include "oracle/oracle.hpp"

#include <fstream>
#include <sstream>

namespace mp {

ModPolyModP modp_direct(int ell, uint64_t p, uint64_t seed, std::vector<Artin>* jk_out) {
  if (!is_odd_prime(ell)) fail(Err::InvalidArgument, "l must be an odd prime");
  if (p <= 11 || (p + 1) % static_cast<uint64_t>(ell) != 0 || p % 4 != 3 || !is_prime_u64(p)) {
    fail(Err::InvalidArgument, "E0[l] is not rational over F_{p^2}");
  }
  FieldScope fs(p);
  Rng rng = pipeline_rng(seed, ell, p, 1);
  const size_t prec = static_cast<size_t>(ell + 2);
  const CurveF E = e0_curve();
  const Fp2 j0 = j_invariant(E);
  const CurveR ER = curve_from_j_anchored(E, Artin(j0, prec) + Artin::eps(prec));
  const RPoly psi = division_polynomial(ER, ell);
  auto [P, Q] = torsion_basis(E, static_cast<uint64_t>(ell), rng);
  std::vector<Artin> jk;
  for (int k = 0; k <= ell; ++k) {
    PointF Pk = k < ell ? add(E, P, mul(E, Q, static_cast<Scalar>(k))) : Q;
    PointR PkR = lift_point(Pk, ER, psi);
    jk.push_back(j_invariant(velu(ER, PkR, ell).cod));
  }
  if (jk_out) *jk_out = jk;
  return assemble_modp(ell, jk, j0);
}

ReferenceTable load_reference(int ell, const std::string& dir) {
  if (ell != 3 && ell != 5 && ell != 7 && ell != 11 && ell != 13) {
    fail(Err::FixtureError, "no reference table for l = " + std::to_string(ell));
  }
  ReferenceTable t;
  {
    std::ifstream mf(dir + "/MANIFEST");
    if (!mf) fail(Err::FixtureError, "missing MANIFEST in " + dir);
    std::string line;
    while (std::getline(mf, line)) {
      std::istringstream ls(line);
      int l = 0;
      std::string sha, source, date;
      if ((ls >> l >> sha >> source >> date) && l == ell) {
        t.sha256 = sha;
        t.source = source;
        t.retrieved = date;
      }
    }
  }
  if (t.sha256.empty()) fail(Err::FixtureError, "l = " + std::to_string(ell) + " is not listed in MANIFEST");
  const std::string path = dir + "/phi_" + std::to_string(ell) + ".txt";
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::FixtureError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();
  if (sha256_hex(bytes) != t.sha256) fail(Err::FixtureError, path + " does not match its checksum");
  std::istringstream is(bytes);
  try {
    t.phi = read_flat(is);
  } catch (const Error& e) {
    fail(Err::FixtureError, path + ": " + e.what());
  }
  if (t.phi.ell != ell) fail(Err::FixtureError, path + " has the wrong degree");
  return t;
}

ReferenceTable load_reference(int ell) { return load_reference(ell, MODPOLY_DATA_DIR); }

}  // namespace mp
