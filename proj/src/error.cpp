// Copyright 2026 The mvcodes Authors.
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

#include "mvcodes/error.hpp"

namespace mvc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndivisibleDimension: return "IndivisibleDimension";
    case ErrorCode::kChainShapeMismatch: return "ChainShapeMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kMissingBlock: return "MissingBlock";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kPointArityMismatch: return "PointArityMismatch";
    case ErrorCode::kMissingEvaluation: return "MissingEvaluation";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kInfeasiblePlan: return "InfeasiblePlan";
    case ErrorCode::kNonIntegralAssignment: return "NonIntegralAssignment";
    case ErrorCode::kNeverDecodable: return "NeverDecodable";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace mvc
