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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "glzi/analytics.hpp"
#include "glzi/battery.hpp"
#include "glzi/config.hpp"
#include "glzi/metrics.hpp"
#include "glzi/protocol.hpp"
#include "glzi/scan.hpp"

using namespace glzi;
namespace an = glzi::analytics;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

ScanConfig default_config(Experiment e, KeyValues kv) {
  auto cfg = resolve_config(e, kv);
  cfg.workers = workers();
  return cfg;
}

// 1
Outcome parameter_fidelity() {
  const auto n = NoiseParams::from_times(118.0, 157.0);
  const bool ok = fmt("%.3e", n.gamma1) == "8.475e-03" && fmt("%.3e", n.gamma_phi) == "2.132e-03" &&
                  fmt("%.2e", n.gamma1) == "8.48e-03" && fmt("%.2e", n.gamma_phi) == "2.13e-03";
  return {ok, fmt("Gamma1=%.4e /ns (3 s.f. %.2e, want 8.48e-03), gamma_phi=%.4e /ns (3 s.f. %.2e, want 2.13e-03)",
                  n.gamma1, n.gamma1, n.gamma_phi, n.gamma_phi)};
}

// 2
Outcome battery_loss() {
  NoiseParams noise = NoiseParams::from_times(118.0, 157.0, 1e-4);
  double worst_n = 0.0;
  double worst_a = 0.0;
  for (double nbar : {2.0, 5.0, 10.0}) {
    ProtocolParams p;
    p.nbar = nbar;
    p.theta_geo = 0.7;
    const int nc = compute_cutoff(Coherent{nbar, 0.0});
    const QuantumModel model(0.0, nc, noise);
    const auto r = model.run(p, build_coherent(nbar, p.battery_phase(), nc), IntegratorConfig{});
    worst_n = std::max(worst_n, std::abs(r.mean_n_final / r.mean_n_initial - std::exp(-0.01)));
    worst_a = std::max(worst_a, std::abs(std::abs(r.a_mean_final) / std::abs(r.a_mean_initial) - std::exp(-0.005)));
  }
  return {worst_n < 1e-5 && worst_a < 1e-5,
          fmt("max |<n> ratio - e^-0.01|=%.2e, max ||<a>| ratio - e^-0.005|=%.2e", worst_n, worst_a)};
}

// 3
Outcome sector_oracle() {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<int> ns(11);
  for (int i = 0; i <= 10; ++i) ns[static_cast<std::size_t>(i)] = i;
  std::shuffle(ns.begin(), ns.end(), rng);
  ns.resize(6);
  std::sort(ns.begin(), ns.end());

  const int n_cut = 11;
  StateVector c = StateVector::Zero(n_cut);
  for (int n : ns) c(n) = std::polar(0.2 + u(rng), 2 * kPi * u(rng));
  c.normalize();

  const double g = ProtocolParams{}.coupling();
  IntegratorConfig cfg;
  cfg.rtol = 1e-10;
  cfg.atol = 1e-12;
  const QuantumModel model(g, n_cut, NoiseParams::none());
  const auto times = uniform_grid(0.0, 100.0, 50);
  const std::vector<Complex> amps(c.data(), c.data() + c.size());
  double worst = 0.0;
  for (double delta : {0.0, angular_from_mhz(15.0), -angular_from_mhz(40.0)}) {
    const auto states = evolve_frozen(model.initial_state(c), model.liouvillian(), delta, times, cfg);
    for (std::size_t k = 0; k < times.size(); ++k) {
      const double sim = reduce_to_qubit(states[k])(kExcited, kExcited).real();
      worst = std::max(worst, std::abs(sim - an::reduced_qubit(amps, g, delta, times[k]).rho_ee));
    }
  }
  std::string support;
  for (int n : ns) support += std::to_string(n) + " ";
  return {worst < 1e-6, fmt("components {%s}, 3 detunings x 50 times: max |d rho_ee|=%.2e", support.c_str(), worst)};
}

// 4
Outcome rabi() {
  const double g = ProtocolParams{}.coupling();
  const auto times = uniform_grid(0.0, 100.0, 101);
  double worst = 0.0;
  for (int n : {1, 2, 5}) {
    const QuantumModel model(g, compute_cutoff(Fock{n}), NoiseParams::none());
    const auto states = evolve_frozen(model.initial_state(build_fock(n, model.n_cut())), model.liouvillian(), 0.0,
                                      times, IntegratorConfig{});
    for (std::size_t k = 0; k < times.size(); ++k) {
      const double pe = expectation(states[k], model.operators().excited).real();
      worst = std::max(worst, std::abs(pe - std::pow(std::sin(g * std::sqrt(n) * times[k]), 2)));
    }
  }
  return {worst < 1e-6, fmt("n in {1,2,5}: max |P_e - sin^2(g sqrt(n) t)|=%.2e", worst)};
}

// 5
Outcome excitation_number() {
  ProtocolParams p;
  p.theta_geo = 0.9;
  const int nc = compute_cutoff(Coherent{5.0, 0.0});
  const QuantumModel model(p.coupling(), nc, NoiseParams::none());
  const StateVector battery = build_coherent(5.0, p.battery_phase(), nc);
  const auto& ops = model.operators();
  const double n0 = expectation(model.initial_state(battery), ops.n_tot).real();

  double drift = 0.0;
  RunOptions no_echo;
  no_echo.apply_echo = false;
  no_echo.observer = [&](Stage, double, const DensityMatrix& rho) {
    drift = std::max(drift, std::abs(expectation(rho, ops.n_tot).real() - n0));
  };
  model.run(p, battery, IntegratorConfig{}, no_echo);

  double before = 0.0;
  double after = 0.0;
  double pe_before = 0.0;
  double drift_echo = 0.0;
  double reference = n0;
  RunOptions with_echo;
  with_echo.observer = [&](Stage s, double, const DensityMatrix& rho) {
    const double n = expectation(rho, ops.n_tot).real();
    if (s == Stage::PlateauFirstHalf) {
      before = n;
      pe_before = expectation(rho, ops.excited).real();
    }
    if (s == Stage::Echo) {
      after = n;
      reference = n;
      return;
    }
    drift_echo = std::max(drift_echo, std::abs(n - reference));
  };
  model.run(p, battery, IntegratorConfig{}, with_echo);
  const double jump_err = std::abs((after - before) - (1.0 - 2.0 * pe_before));
  const double worst = std::max({drift, drift_echo});
  return {worst < 1e-8 && jump_err < 1e-8,
          fmt("drift without echo %.2e, drift between echoes %.2e, jump %.6f vs 1-2P_e=%.6f (err %.2e)", drift,
              drift_echo, after - before, 1.0 - 2.0 * pe_before, jump_err)};
}

struct CoherentSweep {
  std::vector<double> nbar;
  std::vector<double> contrast;
  std::vector<double> mean_dn;
  double c_cl = 0.0;
  double seconds = 0.0;
};

CoherentSweep coherent_sweep() {
  static CoherentSweep cache;
  if (!cache.nbar.empty()) return cache;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cfg = default_config(Experiment::ContrastScan, {{"grid.theta_count", "41"}});
  for (double nbar : {2.0, 3.0, 5.0, 7.5, 10.0, 15.0}) {
    const auto rs = scan_fringe(cfg, Coherent{nbar, 0.0}, nbar);
    std::vector<double> pe;
    std::vector<double> dn;
    for (const auto& r : rs) {
      pe.push_back(r.p_e);
      dn.push_back(r.delta_n);
    }
    cache.nbar.push_back(nbar);
    cache.contrast.push_back(contrast(pe));
    cache.mean_dn.push_back(backaction(dn).mean);
  }
  std::vector<double> pe;
  for (const auto& r : scan_fringe(cfg, std::nullopt, 5.0)) pe.push_back(r.p_e);
  cache.c_cl = contrast(pe);
  cache.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cache;
}

// 6
Outcome classical_recovery() {
  const auto s = coherent_sweep();
  bool monotone = true;
  for (std::size_t k = 1; k < s.contrast.size(); ++k) monotone = monotone && s.contrast[k] >= s.contrast[k - 1] - 1e-4;
  std::vector<double> fn;
  std::vector<double> fc;
  for (std::size_t k = 0; k < s.nbar.size(); ++k)
    if (s.nbar[k] >= 3.0) {
      fn.push_back(s.nbar[k]);
      fc.push_back(s.contrast[k]);
    }
  const auto fit = contrast_deficit_fit(fn, fc, s.c_cl);
  std::string cs;
  for (double c : s.contrast) cs += fmt("%.4f ", c);
  const bool ok = monotone && s.contrast.back() > s.contrast.front() && fit.r2 > 0.9;
  return {ok, fmt("C = {%s}, C_cl=%.4f, monotone=%s, deficit fit slope=%.4f r2=%.4f", cs.c_str(), s.c_cl,
                  monotone ? "yes" : "no", fit.slope, fit.r2)};
}

// 7
Outcome backaction_scaling() {
  const auto s = coherent_sweep();
  bool below = true;
  bool decreasing = true;
  std::string ds;
  for (std::size_t k = 0; k < s.nbar.size(); ++k) {
    below = below && s.mean_dn[k] < 2.0;
    if (k > 0) decreasing = decreasing && s.mean_dn[k] / s.nbar[k] < s.mean_dn[k - 1] / s.nbar[k - 1];
    ds += fmt("%.3f ", s.mean_dn[k]);
  }
  return {below && decreasing, fmt("mean dn = {%s}, all < 2: %s, dn/nbar decreasing: %s", ds.c_str(),
                                   below ? "yes" : "no", decreasing ? "yes" : "no")};
}

// 8
Outcome squeezing() {
  // Var(n) of the truncated discrete Gaussian, frozen from an independent scipy evaluation.
  const std::map<std::pair<double, double>, double> number_var = {{{2.0, 0.75}, 1.062231053849052},
                                                                  {{2.0, 0.5}, 0.4983855674366673},
                                                                  {{5.0, 0.75}, 2.7973065899199163},
                                                                  {{5.0, 0.5}, 1.2499930335717693}};
  const auto cfg = default_config(Experiment::SqueezeBench, {{"grid.theta_count", "41"}});
  const auto sweep = coherent_sweep();
  bool var_ok = true;
  bool eta_ok = true;
  bool dc_ok = true;
  double worst_var = 0.0;
  double worst_eta = 0.0;
  double max_dc = -1.0;
  for (double nbar : {2.0, 5.0}) {
    const auto it = std::find(sweep.nbar.begin(), sweep.nbar.end(), nbar);
    const double c_coh = sweep.contrast[static_cast<std::size_t>(it - sweep.nbar.begin())];
    auto fringe = [&](const BatteryStateSpec& spec) {
      const auto rs = scan_fringe(cfg, spec, nbar);
      std::vector<double> pe;
      for (const auto& r : rs) pe.push_back(r.p_e);
      return std::make_pair(contrast(pe), rs.front());
    };
    for (double r : {0.15, 0.35}) {
      const auto [c, rec] = fringe(DisplacedSqueezed{nbar, r, 0.0, SqueezeAlignment::Amplitude, 0.0});
      const auto ref = an::squeezed_stats(nbar, r, SqueezeAlignment::Amplitude);
      const double dv = std::abs(rec.var_n_init - ref.var_n);
      const double de = std::abs(rec.eta_coh_init - (1.0 - std::pow(std::sinh(r), 2) / nbar));
      worst_var = std::max(worst_var, dv);
      worst_eta = std::max(worst_eta, de);
      var_ok = var_ok && rec.var_n_init < nbar && dv < 1e-4;
      eta_ok = eta_ok && de < 1e-3;
      dc_ok = dc_ok && c - c_coh <= 0.0;
      max_dc = std::max(max_dc, c - c_coh);
    }
    for (double q : {0.75, 0.5}) {
      const auto [c, rec] = fringe(NumberSqueezedGaussian{nbar, q, 0.0});
      const double dv = std::abs(rec.var_n_init - number_var.at({nbar, q}));
      worst_var = std::max(worst_var, dv);
      var_ok = var_ok && rec.var_n_init < nbar && dv < 1e-4;
      dc_ok = dc_ok && c - c_coh <= 0.0;
      max_dc = std::max(max_dc, c - c_coh);
    }
  }
  return {var_ok && eta_ok && dc_ok,
          fmt("max |Var - closed form|=%.2e, max |eta - (1 - sinh^2 r/nbar)|=%.2e, max dC=%.4f", worst_var, worst_eta,
              max_dc)};
}

// 9
Outcome closed_forms() {
  std::vector<std::string> failed;
  auto need = [&](bool ok, const char* name) {
    if (!ok) failed.emplace_back(name);
  };
  const double omega = angular_from_mhz(20.0);
  const double g = omega / (2.0 * std::sqrt(5.0));
  need(an::sector_gap(0, g) == 0.0 && std::abs(an::sector_gap(5, g) / omega - 1.0) < 1e-14 &&
           std::abs(mhz_from_angular(g) - 4.472136) < 1e-6,
       "sector_gap");

  const auto p5 = an::neighbor_gap_expansion(5, an::Branch::Plus, 2);
  const auto m2 = an::neighbor_gap_expansion(2, an::Branch::Minus, 2);
  const auto e1 = an::neighbor_gap_expansion(200, an::Branch::Plus, 2);
  const auto e2 = an::neighbor_gap_expansion(400, an::Branch::Plus, 2);
  const double order = std::log(std::abs(e1.exact_ratio - e1.series_ratio) / std::abs(e2.exact_ratio - e2.series_ratio)) /
                       std::log(2.0);
  need(std::abs(p5.exact_ratio - 1.095445) < 1e-6 && std::abs(p5.series_ratio - 1.095) < 1e-15 &&
           std::abs(m2.exact_ratio - 0.70711) < 1e-5 && std::abs(m2.series_ratio - 0.71875) < 1e-15 &&
           std::abs(order - 3.0) < 0.05,
       "neighbor_gap_expansion");

  need(std::abs(an::gap_width(5.0, 5.0) - 0.22361) < 1e-5 && an::gap_width(0.0, 5.0) == 0.0 &&
           std::abs(an::gap_width(1.25, 5.0) - 0.1118) < 1e-4,
       "gap_width");

  const double v = an::sweep_rate(angular_from_mhz(100.0), 25.0);
  double power = 0.0;
  for (int n = 0; n <= 30; ++n)
    power = std::max(power, std::abs(an::lz_probability(omega * std::sqrt(n / 5.0), v) -
                                     std::pow(an::lz_probability(omega, v), n / 5.0)));
  const double beta = an::lz_exponent(omega, v);
  need(power < 1e-14 && std::abs(beta - 0.05 * kPi * kPi) < 1e-14 &&
           std::abs(an::lz_probability(omega, v) - 0.6105) < 1e-4,
       "power_law");

  const double p0 = std::exp(-beta);
  auto amp = [&](double x) { return 4.0 * std::exp(-beta * x) * (1.0 - std::exp(-beta * x)); };
  const double h = 1e-3;
  const double fd = (amp(1.0 + h) - 2.0 * amp(1.0) + amp(1.0 - h)) / (h * h);
  need(std::abs(fd / an::fringe_amplitude_curvature(p0, beta) - 1.0) < 1e-6, "fringe_curvature");

  bool even = true;
  for (double r : {0.3, 0.8, 1.2}) {
    const StateVector sv = build_squeezed_vacuum(r, 0.4, compute_cutoff(SqueezedVacuum{r, 0.4}));
    for (Eigen::Index n = 1; n < sv.size(); n += 2) even = even && sv(n) == Complex(0.0, 0.0);
  }
  need(even, "squeezed_vacuum_even");

  bool small_r = true;
  // The r^3 remainder grows with nbar; the 5 r^3 bound holds up to nbar ~ 5.
  for (double nbar : {1.0, 2.0, 5.0})
    for (double r : {0.02, 0.05, 0.1}) {
      const auto s = an::squeezed_stats(nbar, r, SqueezeAlignment::Amplitude);
      small_r = small_r && std::abs(an::amplitude_variance_series(nbar, r) - s.var_n) / s.var_n < 5 * r * r * r / s.var_n;
      small_r = small_r && std::abs(an::eta_series(nbar, r) - s.eta_coh) <= 2 * std::pow(r, 4) / nbar;
    }
  need(small_r, "small_r_expansion");

  std::string names;
  for (const auto& f : failed) names += f + " ";
  return {failed.empty(), failed.empty() ? "7 groups: gap, expansion, width, power law, A''(1), even support, small r"
                                         : "failed: " + names};
}

// 10
Outcome heatmap() {
  const auto cfg = default_config(Experiment::Heatmap, {{"grid.theta_count", "21"}, {"grid.tau_p_count", "21"}});
  const auto pts = heatmap_points(cfg);
  const auto q = scan_points(cfg, Coherent{5.0, 0.0}, 5.0, pts);
  const auto c = scan_points(cfg, std::nullopt, 5.0, pts);
  double min_eig = std::numeric_limits<double>::infinity();
  double max_diff = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    min_eig = std::min({min_eig, q[i].min_eig, c[i].min_eig});
    max_diff = std::max(max_diff, std::abs(q[i].p_e - c[i].p_e));
  }
  return {pts.size() == 441 && min_eig >= -1e-7 && max_diff > 0.01,
          fmt("%zu pixels x 2, min eigenvalue %.2e, max |dP_e| vs classical %.4f", pts.size(), min_eig, max_diff)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"parameter fidelity", parameter_fidelity},
      {"battery-loss bookkeeping", battery_loss},
      {"sector-oracle equivalence", sector_oracle},
      {"Rabi check", rabi},
      {"N_tot conservation and echo jump", excitation_number},
      {"quantum-to-classical recovery", classical_recovery},
      {"back-action", backaction_scaling},
      {"squeezing benchmark", squeezing},
      {"closed-form suite", closed_forms},
      {"heatmap smoke test", heatmap},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%2zu] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                dt);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
