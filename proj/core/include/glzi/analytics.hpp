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

#include <functional>
#include <span>

#include "glzi/battery.hpp"
#include "glzi/hilbert.hpp"

// Closed-form results for photon-number-resolved Landau-Zener physics and
// squeezed batteries. Nothing here calls the simulator; these functions are
// the independent side of every simulator cross-check.
namespace glzi::analytics {

/// Omega_n = 2 g sqrt(n).
double sector_gap(int n, double g);

enum class Branch { Plus, Minus };

struct GapExpansion {
  double exact_ratio = 0.0;   // Omega_{n+-1} / Omega_n = sqrt(1 +- 1/n)
  double series_ratio = 0.0;  // 1 +- 1/(2n) [- 1/(8 n^2) at order 2]
};
GapExpansion neighbor_gap_expansion(int n, Branch branch, int order = 2);

/// Relative rms gap width sqrt(Var n) / (2 nbar).
double gap_width(double var_n, double nbar);

/// Sweep rate of the linear ramp, 2 delta0 / tau_p.
double sweep_rate(double delta0, double tau_p);

/// Landau-Zener exponent beta = pi Omega^2 / (2 v).
double lz_exponent(double gap, double v);

/// Asymptotic P = exp(-pi Omega^2 / (2 v)).
double lz_probability(double gap, double v);

/// Adiabatic-impulse fringe amplitude A = 4 P (1 - P).
double fringe_amplitude(double p);

/// A''(1) for A(x) = 4 e^{-beta x}(1 - e^{-beta x}), i.e. 4 beta^2 P0 (1 - 4 P0).
double fringe_amplitude_curvature(double p0, double beta);

/// Leading deficit A(1) - <A> = 2 beta^2 P0 (4 P0 - 1) Var(n) / nbar^2.
double averaged_deficit(double p0, double beta, double var_n, double nbar);

/// Brute-force Poisson average sum_n p_n A(n / nbar), truncated at
/// nbar + 10 sqrt(nbar) (+ margin) so the neglected weight is below 1e-12.
double poisson_averaged_amplitude(double nbar, double beta);

struct SectorParams {
  int n = 1;
  double g = 0.0;
  double delta = 0.0;  // constant detuning

  /// lambda_n = sqrt(g^2 n + delta^2 / 4)
  double lambda() const;
};

/// Amplitudes of |n,g> -> A_n |n,g> + B_n |n-1,e>.
struct SectorAmplitudes {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
};

/// Constant-detuning solution. For n = 0 the lone state |0,g> only picks up
/// the phase e^{i delta t / 2}.
SectorAmplitudes sector_amplitudes(const SectorParams& sp, double t);

using SectorSolution = std::function<SectorAmplitudes(const SectorParams&, double)>;

struct ReducedQubit {
  double rho_ee = 0.0;
  double rho_gg = 0.0;
  Complex rho_ge{0.0, 0.0};  // <g| rho |e>
};

/// Qubit state at time t for battery amplitudes c_n with the qubit starting in |g>.
ReducedQubit reduced_qubit(std::span<const Complex> c, double g, double delta, double t,
                           const SectorSolution& solution = sector_amplitudes);

/// <a> = sum_k sqrt(k+1) c_k^* c_{k+1}.
Complex amean_from_amplitudes(std::span<const Complex> c);

/// Var(n) of D(alpha)S(zeta)|0> for |alpha|^2 and the angle difference 2 phi_alpha - theta_s.
double squeezed_variance(double alpha_abs2, double r, double angle_difference);

struct SqueezedStats {
  double var_n = 0.0;
  double eta_coh = 0.0;
  double omega_eff_ratio = 0.0;  // Omega_eff / Omega = sqrt(eta_coh)
};

/// Statistics at fixed energy nbar = |alpha|^2 + sinh^2 r. For Angle alignment
/// `angle_difference` is 2 phi_alpha - theta_s. Throws EnergyBudgetExceeded.
SqueezedStats squeezed_stats(double nbar, double r, SqueezeAlignment alignment, double angle_difference = 0.0);

/// Small-r forms: Var_amp ~ nbar - 2 nbar r + (2 nbar + 1) r^2 and eta ~ 1 - r^2 / nbar.
double amplitude_variance_series(double nbar, double r);
double eta_series(double nbar, double r);

/// p_{2m} = (2m)! / (2^{2m} (m!)^2) tanh^{2m} r / cosh r.
double squeezed_vacuum_weight(int m, double r);

/// Resonant P_e(t) = sum_m p_{2m} sin^2(g sqrt(2m) t) for a squeezed-vacuum battery.
double squeezed_vacuum_resonant_pe(double r, double g, double t, int m_max = 400);

/// <a> of a number-squeezed phase state: e^{-i phase} sum sqrt(n+1) sqrt(p_n p_{n+1}).
Complex number_squeezed_amean(std::span<const double> p, double phase);

}  // namespace glzi::analytics
