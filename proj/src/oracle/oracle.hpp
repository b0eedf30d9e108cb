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

#pragma once

#include <string>

#include "modpoly/grid.hpp"

namespace mp {

// phi_l mod p by lifting each kernel point straight onto the deformation of
// E0 (Newton on psi_l over R) and applying Velu over R. Shares only the
// elliptic-curve layer and the final assembly with the diamond pipeline.
ModPolyModP modp_direct(int ell, uint64_t p, uint64_t seed = 0, std::vector<Artin>* jk_out = nullptr);

struct ReferenceTable {
  IntModPoly phi;
  std::string source;
  std::string sha256;
  std::string retrieved;
};

// Pinned reference grid for l in {3, 5, 7, 11, 13}; throws FixtureError when the
// file is missing, unlisted or does not match its checksum.
ReferenceTable load_reference(int ell, const std::string& dir);
// Same, from the directory configured at build time.
ReferenceTable load_reference(int ell);

}  // namespace mp
