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

#include <string>
#include <vector>

// Cross-checks between the closed-form results and the simulator.
namespace glzi {

struct OracleCheckResult {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  std::string relation;  // "<", "<=", ">" or ">="
  bool pass = false;
};

struct OracleCheckOptions {
  /// Flip the sign of B_n inside the sector solution used by the cross-checks.
  bool inject_bn_sign_error = false;
};

std::vector<OracleCheckResult> run_oracle_checks(const OracleCheckOptions& opts = {});

std::string oracle_report_json(const std::vector<OracleCheckResult>& results);

}  // namespace glzi
