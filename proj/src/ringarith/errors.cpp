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

#include "ringarith/errors.hpp"

namespace mp {

const char* err_name(Err e) {
  switch (e) {
    case Err::Ok: return "Ok";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::Structural: return "StructuralError";
    case Err::NotAUnit: return "NotAUnit";
    case Err::SingularJacobian: return "SingularJacobian";
    case Err::ExcludedJInvariant: return "ExcludedJInvariant";
    case Err::SamplingFailure: return "SamplingFailure";
    case Err::InseparableTorsion: return "InseparableTorsion";
    case Err::WouldSplit: return "WouldSplit";
    case Err::NotSplit: return "NotSplit";
    case Err::NotIsotropic: return "NotIsotropic";
    case Err::PrematureSplit: return "PrematureSplit";
    case Err::DegenerateSecant: return "DegenerateSecant";
    case Err::ConvergenceFailure: return "ConvergenceFailure";
    case Err::NoParameters: return "NoParameters";
    case Err::CoefficientNotRational: return "CoefficientNotRational";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::FixtureError: return "FixtureError";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
    case Err::Degenerate: return "Degenerate";
    case Err::SkippedPrime: return "SkippedPrime";
  }
  return "Unknown";
}

}  // namespace mp
