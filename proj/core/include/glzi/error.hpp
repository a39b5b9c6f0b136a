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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glzi {

enum class ErrorCode {
  DimensionMismatch,
  CutoffTooSmall,
  EnergyBudgetExceeded,
  MeanUnreachable,
  IndexOutOfRange,
  InvalidArgument,
  InvalidNoise,
  StepUnderflow,
  MaxStepsExceeded,
  ZeroTrace,
  OutOfWindow,
  EmptyInput,
  DegenerateFit,
  ConfigError,
  IOError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code tells callers what failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Numerical failures map to CLI exit code 3, configuration problems to 2.
  bool is_numerical() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace glzi
