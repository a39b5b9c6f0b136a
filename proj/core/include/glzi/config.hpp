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

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "glzi/liouvillian.hpp"
#include "glzi/odeint.hpp"
#include "glzi/protocol.hpp"

namespace glzi {

enum class Experiment { Fringe, Heatmap, ContrastScan, Backaction, SqueezeBench, OracleCheck };

std::optional<Experiment> parse_experiment(std::string_view name);
std::string_view to_string(Experiment e);

/// Flat `section.key=value` settings. Frequencies are entered in MHz (f, not
/// omega), times in ns, rates in 1/ns.
using KeyValues = std::map<std::string, std::string>;

/// Parses `key=value` lines; blank lines and `#` comments are ignored.
/// Throws ConfigError on malformed lines.
KeyValues parse_key_values(std::string_view text);
KeyValues load_config_file(const std::filesystem::path& path);

/// Parses a single `key=value` override as given to --set.
std::pair<std::string, std::string> parse_assignment(std::string_view assignment);

struct ScanConfig {
  Experiment experiment = Experiment::Fringe;
  ProtocolParams protocol;
  NoiseParams noise;
  IntegratorConfig integrator;

  int theta_count = 101;
  double tau_p_min = 25.0;
  double tau_p_max = 35.0;
  int tau_p_count = 101;
  std::vector<double> nbar_list;
  std::vector<double> r_list;
  std::vector<double> q_list;
  double fit_nbar_min = 3.0;
  bool inject_bn_sign_error = false;

  std::filesystem::path out_dir = "glzi_out";
  int workers = 1;
  bool svg = false;

  KeyValues resolved;  // every setting with its effective value, for sidecars
  std::vector<std::string> warnings;
};

/// Default battery mean-photon-number list for each experiment.
std::vector<double> default_nbar_list(Experiment e);

/// Applies `settings` on top of the defaults. Unknown keys and invalid values
/// raise ConfigError; inconsistent noise raises InvalidNoise.
ScanConfig resolve_config(Experiment e, const KeyValues& settings);

}  // namespace glzi
