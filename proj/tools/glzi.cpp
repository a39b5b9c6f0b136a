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

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "glzi/config.hpp"
#include "glzi/error.hpp"
#include "glzi/scan.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Echo-refocused geometric Landau-Zener interferometry with a bosonic battery"};
  app.set_version_flag("--version", std::string(glzi::version_string()));

  std::string experiment;
  std::string config_file;
  std::vector<std::string> assignments;
  std::string out_dir = "glzi_out";
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool svg = false;

  app.add_option("experiment", experiment,
                 "fringe | heatmap | contrast-scan | backaction | squeeze-bench | oracle-check")
      ->required();
  app.add_option("--config", config_file, "key=value config file (section.key=value lines)");
  app.add_option("--set", assignments, "override a setting, e.g. --set protocol.tau_p_ns=30");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--svg", svg, "also write SVG plots");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    const auto which = glzi::parse_experiment(experiment);
    if (!which) throw glzi::Error(glzi::ErrorCode::ConfigError, "unknown experiment '" + experiment + "'");

    glzi::KeyValues settings;
    if (!config_file.empty()) settings = glzi::load_config_file(config_file);
    for (const auto& a : assignments) {
      auto [key, value] = glzi::parse_assignment(a);
      settings[key] = value;
    }

    glzi::ScanConfig cfg = glzi::resolve_config(*which, settings);
    cfg.out_dir = out_dir;
    cfg.workers = workers;
    cfg.svg = svg;
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";

    const auto result = glzi::run_experiment(cfg);
    std::cout << result.summary;
    for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
    return 0;
  } catch (const glzi::Error& e) {
    std::cerr << "error [" << glzi::to_string(e.code()) << "]: " << e.what() << "\n";
    return e.is_numerical() ? kExitNumerical : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
