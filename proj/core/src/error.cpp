// Copyright 2026 The glzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glzi/error.hpp"

namespace glzi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::EnergyBudgetExceeded: return "EnergyBudgetExceeded";
    case ErrorCode::MeanUnreachable: return "MeanUnreachable";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidNoise: return "InvalidNoise";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::MaxStepsExceeded: return "MaxStepsExceeded";
    case ErrorCode::ZeroTrace: return "ZeroTrace";
    case ErrorCode::OutOfWindow: return "OutOfWindow";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DegenerateFit: return "DegenerateFit";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

bool Error::is_numerical() const noexcept {
  switch (code_) {
    case ErrorCode::ConfigError:
    case ErrorCode::IOError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidNoise:
    case ErrorCode::EnergyBudgetExceeded:
      return false;
    default:
      return true;
  }
}

}  // namespace glzi
