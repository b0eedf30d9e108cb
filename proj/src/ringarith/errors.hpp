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

#include <stdexcept>
#include <string>

namespace mp {

// Values mirror the MP_ERR_* codes of the C API.
enum class Err : int {
  Ok = 0,
  InvalidArgument = 1,
  Structural = 2,
  NotAUnit = 3,
  SingularJacobian = 4,
  ExcludedJInvariant = 5,
  SamplingFailure = 6,
  InseparableTorsion = 7,
  WouldSplit = 8,
  NotSplit = 9,
  NotIsotropic = 10,
  PrematureSplit = 11,
  DegenerateSecant = 12,
  ConvergenceFailure = 13,
  NoParameters = 14,
  CoefficientNotRational = 15,
  InternalInconsistency = 16,
  FixtureError = 17,
  ParseError = 18,
  IoError = 19,
  Degenerate = 20,
  SkippedPrime = 21,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Err code, const char* what) {
  if (!cond) fail(code, what);
}

}  // namespace mp
