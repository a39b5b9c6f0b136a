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

#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "glzi/battery.hpp"
#include "glzi/config.hpp"
#include "glzi/protocol.hpp"

namespace glzi {

/// One grid point of any experiment.
struct ScanRecord {
  std::string experiment;
  std::string battery;  // describe() of the spec, or "classical"
  double theta_geo = 0.0;
  double tau_p = 0.0;
  double nbar = 0.0;
  double r = 0.0;
  double q = 0.0;
  double p_e = 0.0;
  double delta_n = 0.0;
  double var_n_init = 0.0;
  double eta_coh_init = 0.0;
  double trace_defect = 0.0;
  double min_eig = 0.0;
  double wall_time = 0.0;  // s
};

/// A point of the (theta_geo, tau_p) plane.
struct GridPoint {
  double theta_geo = 0.0;
  double tau_p = 0.0;
};

/// Runs fn(i) for i in [0, count) on `workers` threads. Results must be
/// written to per-index slots; the first exception is rethrown after join.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const auto n_threads = static_cast<std::size_t>(std::max(1, workers));
  if (n_threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(n_threads, count); ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

/// Runs the interferometer at each grid point; `battery` empty means the
/// classical reference. One generator is shared by all points. The returned
/// records are in the order of `points` regardless of worker count.
std::vector<ScanRecord> scan_points(const ScanConfig& cfg, const std::optional<BatteryStateSpec>& battery,
                                    double nbar, std::span<const GridPoint> points);

/// theta grid at the configured tau_p.
std::vector<ScanRecord> scan_fringe(const ScanConfig& cfg, const std::optional<BatteryStateSpec>& battery,
                                    double nbar);

std::vector<GridPoint> theta_points(const ScanConfig& cfg);
std::vector<GridPoint> heatmap_points(const ScanConfig& cfg);  // theta outer, tau_p inner

/// 12 significant digits, '.' decimal separator.
std::string format_csv_number(double x);

struct ExperimentOutput {
  std::vector<std::filesystem::path> files;
  std::string summary;  // human readable, printed by the CLI
};

/// Executes the configured experiment and writes CSV + JSON sidecars (and SVG
/// when requested) under cfg.out_dir.
ExperimentOutput run_experiment(const ScanConfig& cfg);

std::string_view version_string();

}  // namespace glzi
