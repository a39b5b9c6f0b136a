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

#include "glzi/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "glzi/error.hpp"

namespace glzi {
namespace {

constexpr std::pair<Experiment, std::string_view> kExperimentNames[] = {
    {Experiment::Fringe, "fringe"},
    {Experiment::Heatmap, "heatmap"},
    {Experiment::ContrastScan, "contrast-scan"},
    {Experiment::Backaction, "backaction"},
    {Experiment::SqueezeBench, "squeeze-bench"},
    {Experiment::OracleCheck, "oracle-check"},
};

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "protocol.omega_mhz",      "protocol.delta0_mhz",   "protocol.tau_p_ns",     "protocol.tau_c_ns",
      "protocol.phi_echo_rad",   "noise.t1_ns",           "noise.t2_ns",           "noise.gamma1_per_ns",
      "noise.gamma_phi_per_ns",  "noise.kappa_per_ns",    "noise.nth",             "integrator.rtol",
      "integrator.atol",         "integrator.h_init_ns",  "integrator.h_min_ns",   "integrator.h_max_ns",
      "integrator.max_steps",    "grid.theta_count",      "grid.tau_p_min_ns",     "grid.tau_p_max_ns",
      "grid.tau_p_count",        "grid.nbar_list",        "grid.r_list",           "grid.q_list",
      "grid.fit_nbar_min",       "oracle.inject_bn_sign_error",
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigError, key + ": '" + value + "' is not a number");
  }
}

long to_integer(const std::string& key, const std::string& value) {
  const double v = to_double(key, value);
  if (v != static_cast<double>(static_cast<long>(v)))
    throw Error(ErrorCode::ConfigError, key + ": '" + value + "' is not an integer");
  return static_cast<long>(v);
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(to_double(key, item));
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, key + ": empty list");
  return out;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_list(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_value(xs[i]);
  }
  return out;
}

}  // namespace

std::optional<Experiment> parse_experiment(std::string_view name) {
  for (const auto& [e, n] : kExperimentNames)
    if (n == name) return e;
  return std::nullopt;
}

std::string_view to_string(Experiment e) {
  for (const auto& [x, n] : kExperimentNames)
    if (x == e) return n;
  return "unknown";
}

std::pair<std::string, std::string> parse_assignment(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
    throw Error(ErrorCode::ConfigError, "expected key=value, got '" + std::string(assignment) + "'");
  std::string key = trim(assignment.substr(0, eq));
  std::string value = trim(assignment.substr(eq + 1));
  if (key.empty()) throw Error(ErrorCode::ConfigError, "empty key in '" + std::string(assignment) + "'");
  return {std::move(key), std::move(value)};
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    try {
      auto [k, v] = parse_assignment(t);
      out[k] = v;
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

KeyValues load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_key_values(ss.str());
}

std::vector<double> default_nbar_list(Experiment e) {
  switch (e) {
    case Experiment::Fringe: return {0.5, 1.0, 2.0, 5.0, 10.0};
    case Experiment::Heatmap: return {2.0, 5.0};
    case Experiment::ContrastScan:
    case Experiment::Backaction: return {0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 5.0, 7.5, 10.0, 15.0};
    case Experiment::SqueezeBench: return {1.0, 2.0, 3.0, 5.0, 7.5, 10.0};
    case Experiment::OracleCheck: return {5.0};
  }
  return {};
}

ScanConfig resolve_config(Experiment e, const KeyValues& settings) {
  for (const auto& [k, v] : settings)
    if (!known_keys().contains(k)) throw Error(ErrorCode::ConfigError, "unknown setting '" + k + "'");

  ScanConfig cfg;
  cfg.experiment = e;
  auto has = [&](const char* key) { return settings.contains(key); };
  auto num = [&](const char* key, double fallback) {
    const auto it = settings.find(key);
    return it == settings.end() ? fallback : to_double(key, it->second);
  };
  auto integer = [&](const char* key, long fallback) {
    const auto it = settings.find(key);
    return it == settings.end() ? fallback : to_integer(key, it->second);
  };
  auto boolean = [&](const char* key, bool fallback) {
    const auto it = settings.find(key);
    if (it == settings.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw Error(ErrorCode::ConfigError, std::string(key) + ": expected true/false, got '" + it->second + "'");
  };
  auto list = [&](const char* key, std::vector<double> fallback) {
    const auto it = settings.find(key);
    return it == settings.end() ? fallback : to_list(key, it->second);
  };

  const double omega_mhz = num("protocol.omega_mhz", 20.0);
  const double delta0_mhz = num("protocol.delta0_mhz", 100.0);
  cfg.protocol.omega = angular_from_mhz(omega_mhz);
  cfg.protocol.delta0 = angular_from_mhz(delta0_mhz);
  cfg.protocol.tau_p = num("protocol.tau_p_ns", 25.0);
  cfg.protocol.tau_c = num("protocol.tau_c_ns", 100.0);
  cfg.protocol.phi_echo = num("protocol.phi_echo_rad", 0.0);

  const double t1 = num("noise.t1_ns", 118.0);
  const double t2 = num("noise.t2_ns", 157.0);
  if (has("noise.gamma1_per_ns") && has("noise.t1_ns"))
    cfg.warnings.push_back("both noise.gamma1_per_ns and noise.t1_ns given; using the rate");
  if (has("noise.gamma_phi_per_ns") && has("noise.t2_ns"))
    cfg.warnings.push_back("both noise.gamma_phi_per_ns and noise.t2_ns given; using the rate");
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw Error(ErrorCode::ConfigError, "noise.t1_ns and noise.t2_ns must be positive");
  cfg.noise.gamma1 = has("noise.gamma1_per_ns") ? num("noise.gamma1_per_ns", 0.0) : 1.0 / t1;
  cfg.noise.gamma_phi =
      has("noise.gamma_phi_per_ns") ? num("noise.gamma_phi_per_ns", 0.0) : 1.0 / t2 - 0.5 * cfg.noise.gamma1;
  cfg.noise.kappa = num("noise.kappa_per_ns", 1e-4);
  cfg.noise.nth = num("noise.nth", 0.0);
  cfg.noise.validate();

  cfg.integrator.rtol = num("integrator.rtol", cfg.integrator.rtol);
  cfg.integrator.atol = num("integrator.atol", cfg.integrator.atol);
  cfg.integrator.h_init = num("integrator.h_init_ns", cfg.integrator.h_init);
  cfg.integrator.h_min = num("integrator.h_min_ns", cfg.integrator.h_min);
  cfg.integrator.h_max = num("integrator.h_max_ns", cfg.integrator.h_max);
  cfg.integrator.max_steps = integer("integrator.max_steps", cfg.integrator.max_steps);
  try {
    cfg.integrator.validate();
  } catch (const Error& err) {
    throw Error(ErrorCode::ConfigError, err.what());
  }

  cfg.theta_count = static_cast<int>(integer("grid.theta_count", 101));
  cfg.tau_p_min = num("grid.tau_p_min_ns", 25.0);
  cfg.tau_p_max = num("grid.tau_p_max_ns", 35.0);
  cfg.tau_p_count = static_cast<int>(integer("grid.tau_p_count", 101));
  cfg.nbar_list = list("grid.nbar_list", default_nbar_list(e));
  cfg.r_list = list("grid.r_list", {0.15, 0.25, 0.35, 0.50});
  cfg.q_list = list("grid.q_list", {0.75, 0.50});
  cfg.fit_nbar_min = num("grid.fit_nbar_min", 3.0);
  cfg.inject_bn_sign_error = boolean("oracle.inject_bn_sign_error", false);

  if (cfg.theta_count < 2) throw Error(ErrorCode::ConfigError, "grid.theta_count must be >= 2");
  if (cfg.tau_p_count < 1) throw Error(ErrorCode::ConfigError, "grid.tau_p_count must be >= 1");
  if (cfg.tau_p_max < cfg.tau_p_min) throw Error(ErrorCode::ConfigError, "grid.tau_p_max_ns < grid.tau_p_min_ns");
  for (double nb : cfg.nbar_list)
    if (!(nb > 0.0)) throw Error(ErrorCode::ConfigError, "grid.nbar_list entries must be > 0");
  ProtocolParams probe = cfg.protocol;
  try {
    probe.validate();
    if (e == Experiment::Heatmap) {
      probe.tau_p = cfg.tau_p_max;
      probe.validate();
    }
  } catch (const Error& err) {
    throw Error(ErrorCode::ConfigError, err.what());
  }

  KeyValues& r = cfg.resolved;
  r["protocol.omega_mhz"] = format_value(omega_mhz);
  r["protocol.delta0_mhz"] = format_value(delta0_mhz);
  r["protocol.tau_p_ns"] = format_value(cfg.protocol.tau_p);
  r["protocol.tau_c_ns"] = format_value(cfg.protocol.tau_c);
  r["protocol.phi_echo_rad"] = format_value(cfg.protocol.phi_echo);
  r["noise.gamma1_per_ns"] = format_value(cfg.noise.gamma1);
  r["noise.gamma_phi_per_ns"] = format_value(cfg.noise.gamma_phi);
  r["noise.kappa_per_ns"] = format_value(cfg.noise.kappa);
  r["noise.nth"] = format_value(cfg.noise.nth);
  if (!has("noise.gamma1_per_ns")) r["noise.t1_ns"] = format_value(t1);
  if (!has("noise.gamma_phi_per_ns")) r["noise.t2_ns"] = format_value(t2);
  r["integrator.rtol"] = format_value(cfg.integrator.rtol);
  r["integrator.atol"] = format_value(cfg.integrator.atol);
  r["integrator.h_init_ns"] = format_value(cfg.integrator.h_init);
  r["integrator.h_min_ns"] = format_value(cfg.integrator.h_min);
  r["integrator.h_max_ns"] = format_value(cfg.integrator.h_max);
  r["integrator.max_steps"] = std::to_string(cfg.integrator.max_steps);
  r["grid.theta_count"] = std::to_string(cfg.theta_count);
  r["grid.tau_p_min_ns"] = format_value(cfg.tau_p_min);
  r["grid.tau_p_max_ns"] = format_value(cfg.tau_p_max);
  r["grid.tau_p_count"] = std::to_string(cfg.tau_p_count);
  r["grid.nbar_list"] = format_list(cfg.nbar_list);
  r["grid.r_list"] = format_list(cfg.r_list);
  r["grid.q_list"] = format_list(cfg.q_list);
  r["grid.fit_nbar_min"] = format_value(cfg.fit_nbar_min);
  r["oracle.inject_bn_sign_error"] = cfg.inject_bn_sign_error ? "true" : "false";
  return cfg;
}

}  // namespace glzi
