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

#include "glzi/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "glzi/error.hpp"

namespace glzi {
namespace {

constexpr double kWindowSlack = 1e-9;  // ns; absorbs t + h round-off at segment ends

struct Segment {
  double t0;
  double t1;
  Stage stage;
};

// Drives rho0 through sweep / half plateau / echo / half plateau / sweep.
DensityMatrix run_segments(const DensityMatrix& rho0, const Liouvillian& generator, const Matrix& echo,
                           const ProtocolParams& p, const IntegratorConfig& cfg, const RunOptions& opts,
                           RunResult& result) {
  const double tm = p.echo_time();
  const Segment first[] = {{0.0, p.tau_p, Stage::ForwardSweep}, {p.tau_p, tm, Stage::PlateauFirstHalf}};
  const Segment second[] = {{tm, p.tau_c - p.tau_p, Stage::PlateauSecondHalf},
                            {p.tau_c - p.tau_p, p.tau_c, Stage::ReverseSweep}};

  const RhsFunction rhs = [&](double t, const Vector& y, Vector& dy) { generator.apply(detuning(t, p), y, dy); };

  DensityMatrix rho = rho0;
  if (opts.observer) opts.observer(Stage::Initial, 0.0, rho);

  auto advance = [&](const Segment& s) {
    if (s.t1 > s.t0) {
      const Vector y = integrate_segment(vectorize(rho), s.t0, s.t1, rhs, cfg, &result.stats);
      rho = devectorize(y);
      result.trace_defect = std::max(result.trace_defect, std::abs(rho.trace() - Complex(1.0, 0.0)));
      rho = sanitize(rho);
    }
    if (opts.observer) opts.observer(s.stage, s.t1, rho);
  };

  for (const auto& s : first) advance(s);
  if (opts.apply_echo) {
    rho = echo * rho * echo.adjoint();
    if (opts.observer) opts.observer(Stage::Echo, tm, rho);
  }
  for (const auto& s : second) advance(s);
  return rho;
}

}  // namespace

double ProtocolParams::coupling() const { return omega / (2.0 * std::sqrt(nbar)); }

void ProtocolParams::validate() const {
  if (!(tau_p > 0.0) || !(tau_c > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau_p and tau_c must be positive");
  if (2.0 * tau_p > tau_c) throw Error(ErrorCode::InvalidArgument, "plateau would be negative: 2 tau_p > tau_c");
  if (omega < 0.0 || delta0 < 0.0) throw Error(ErrorCode::InvalidArgument, "omega and delta0 must be >= 0");
  if (!(nbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "nbar must be > 0 to calibrate the coupling");
}

double detuning(double t, const ProtocolParams& p) {
  if (t < -kWindowSlack || t > p.tau_c + kWindowSlack) {
    std::ostringstream os;
    os << "t=" << t << " ns outside [0, " << p.tau_c << "]";
    throw Error(ErrorCode::OutOfWindow, os.str());
  }
  if (t <= p.tau_p) return -p.delta0 + 2.0 * p.delta0 * t / p.tau_p;
  const double reverse_start = p.tau_c - p.tau_p;
  if (t < reverse_start) return p.delta0;
  return p.delta0 - 2.0 * p.delta0 * (t - reverse_start) / p.tau_p;
}

QubitMatrix echo_unitary(double phi_echo) {
  const Complex minus_i(0.0, -1.0);
  return minus_i * (std::polar(1.0, -phi_echo) * qubit_raise() + std::polar(1.0, phi_echo) * qubit_lower());
}

QuantumModel::QuantumModel(double g, int n_cut, const NoiseParams& noise)
    : g_(g), ops_(build_operators(HilbertSpec{n_cut})), liouvillian_(assemble(ops_, g, noise)) {}

DensityMatrix QuantumModel::initial_state(const StateVector& battery) const {
  if (battery.size() != n_cut())
    throw Error(ErrorCode::DimensionMismatch, "battery vector length differs from the model cutoff");
  return pure_density(joint_state(battery, Eigen::Vector2cd(1.0, 0.0)));
}

RunResult QuantumModel::run(const ProtocolParams& p, const StateVector& battery, const IntegratorConfig& cfg,
                            const RunOptions& opts) const {
  p.validate();
  RunResult result;
  result.has_battery = true;
  result.n_cut = n_cut();

  const DensityMatrix rho0 = initial_state(battery);
  const BatteryObservables before = battery_observables(rho0);
  result.mean_n_initial = before.mean_n;
  result.var_n_initial = before.var_n;
  result.a_mean_initial = before.a_mean;
  result.eta_coh_initial = before.eta_coh;

  const Matrix echo = embed_qubit(ops_.spec, echo_unitary(p.phi_echo));
  const DensityMatrix rho = run_segments(rho0, liouvillian_, echo, p, cfg, opts, result);

  const BatteryObservables after = battery_observables(rho);
  result.mean_n_final = after.mean_n;
  result.var_n_final = after.var_n;
  result.a_mean_final = after.a_mean;
  result.p_e = expectation_real(rho, ops_.excited).value;
  result.min_eig = check_density(rho).min_eigenvalue;
  return result;
}

RunResult run_quantum(const ProtocolParams& p, const BatteryStateSpec& battery, const NoiseParams& noise,
                      const IntegratorConfig& cfg, const RunOptions& opts) {
  p.validate();
  const BatteryStateSpec phased = with_phase(battery, p.battery_phase());
  const int n_cut = compute_cutoff(phased);
  const QuantumModel model(p.coupling(), n_cut, noise);
  return model.run(p, build_battery(phased, n_cut), cfg, opts);
}

RunResult run_classical(const ProtocolParams& p, const NoiseParams& noise, const IntegratorConfig& cfg,
                        const RunOptions& opts) {
  p.validate();
  NoiseParams qubit_noise = noise;
  qubit_noise.kappa = 0.0;
  qubit_noise.nth = 0.0;
  const Liouvillian generator = assemble_classical(p.omega, p.battery_phase(), qubit_noise);

  RunResult result;
  result.has_battery = false;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  result.mean_n_initial = result.mean_n_final = result.var_n_initial = result.var_n_final = nan;
  result.eta_coh_initial = nan;
  result.a_mean_initial = result.a_mean_final = Complex(nan, nan);

  DensityMatrix rho0 = DensityMatrix::Zero(2, 2);
  rho0(kGround, kGround) = 1.0;
  const Matrix echo = echo_unitary(p.phi_echo);
  const DensityMatrix rho = run_segments(rho0, generator, echo, p, cfg, opts, result);
  result.p_e = rho(kExcited, kExcited).real();
  result.min_eig = check_density(rho).min_eigenvalue;
  return result;
}

std::vector<DensityMatrix> evolve_frozen(const DensityMatrix& rho0, const Liouvillian& generator, double delta,
                                         std::span<const double> times, const IntegratorConfig& cfg) {
  if (rho0.rows() != generator.dim()) throw Error(ErrorCode::DimensionMismatch, "rho0 does not match generator");
  const RhsFunction rhs = [&](double, const Vector& y, Vector& dy) { generator.apply(delta, y, dy); };
  std::vector<DensityMatrix> out;
  out.reserve(times.size());
  Vector y = vectorize(rho0);
  double t = 0.0;
  for (const double target : times) {
    if (target < t) throw Error(ErrorCode::InvalidArgument, "sample times must be ascending and >= 0");
    if (target > t) y = integrate_segment(y, t, target, rhs, cfg);
    t = target;
    out.push_back(devectorize(y));
  }
  return out;
}

}  // namespace glzi
