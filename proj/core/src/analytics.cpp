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

#include "glzi/analytics.hpp"

#include <cmath>
#include <numbers>

#include "glzi/error.hpp"

namespace glzi::analytics {

double sector_gap(int n, double g) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "sector index must be >= 0");
  return 2.0 * g * std::sqrt(static_cast<double>(n));
}

GapExpansion neighbor_gap_expansion(int n, Branch branch, int order) {
  if (order != 1 && order != 2) throw Error(ErrorCode::InvalidArgument, "expansion order must be 1 or 2");
  if (n < 1 || (branch == Branch::Minus && n < 2))
    throw Error(ErrorCode::InvalidArgument, "need n >= 1 (n >= 2 for the minus branch)");
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  const double inv = 1.0 / n;
  GapExpansion out;
  out.exact_ratio = std::sqrt(1.0 + sign * inv);
  out.series_ratio = 1.0 + sign * 0.5 * inv;
  if (order == 2) out.series_ratio -= 0.125 * inv * inv;
  return out;
}

double gap_width(double var_n, double nbar) {
  if (!(nbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "nbar must be > 0");
  return std::sqrt(std::max(var_n, 0.0)) / (2.0 * nbar);
}

double sweep_rate(double delta0, double tau_p) { return 2.0 * delta0 / tau_p; }

double lz_exponent(double gap, double v) {
  if (!(v > 0.0)) throw Error(ErrorCode::InvalidArgument, "sweep rate must be > 0");
  return std::numbers::pi * gap * gap / (2.0 * v);
}

double lz_probability(double gap, double v) { return std::exp(-lz_exponent(gap, v)); }

double fringe_amplitude(double p) { return 4.0 * p * (1.0 - p); }

double fringe_amplitude_curvature(double p0, double beta) { return 4.0 * beta * beta * p0 * (1.0 - 4.0 * p0); }

double averaged_deficit(double p0, double beta, double var_n, double nbar) {
  return 2.0 * beta * beta * p0 * (4.0 * p0 - 1.0) * var_n / (nbar * nbar);
}

double poisson_averaged_amplitude(double nbar, double beta) {
  if (!(nbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "nbar must be > 0");
  const int n_max = static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 10.0));
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double pn = std::exp(-nbar + n * std::log(nbar) - std::lgamma(n + 1.0));
    const double p = std::exp(-beta * n / nbar);
    sum += pn * fringe_amplitude(p);
  }
  return sum;
}

double SectorParams::lambda() const { return std::sqrt(g * g * n + 0.25 * delta * delta); }

SectorAmplitudes sector_amplitudes(const SectorParams& sp, double t) {
  const Complex i(0.0, 1.0);
  SectorAmplitudes out;
  if (sp.n == 0) {
    out.a = std::exp(0.5 * i * sp.delta * t);
    out.b = 0.0;
    return out;
  }
  const double lam = sp.lambda();
  if (lam == 0.0) return out;
  const double s = std::sin(lam * t);
  out.a = std::cos(lam * t) + i * (sp.delta / (2.0 * lam)) * s;
  out.b = -i * (sp.g * std::sqrt(static_cast<double>(sp.n)) / lam) * s;
  return out;
}

ReducedQubit reduced_qubit(std::span<const Complex> c, double g, double delta, double t,
                           const SectorSolution& solution) {
  ReducedQubit out;
  const auto size = static_cast<int>(c.size());
  std::vector<SectorAmplitudes> amp(c.size());
  for (int n = 0; n < size; ++n) amp[static_cast<std::size_t>(n)] = solution(SectorParams{n, g, delta}, t);
  for (int n = 0; n < size; ++n) {
    const double pn = std::norm(c[static_cast<std::size_t>(n)]);
    out.rho_gg += pn * std::norm(amp[static_cast<std::size_t>(n)].a);
    if (n >= 1) out.rho_ee += pn * std::norm(amp[static_cast<std::size_t>(n)].b);
  }
  // <g|rho|e> = sum_k G_k E_k^*, G_k = c_k A_k, E_k = c_{k+1} B_{k+1}
  for (int k = 0; k + 1 < size; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    out.rho_ge += c[uk] * std::conj(c[uk + 1]) * amp[uk].a * std::conj(amp[uk + 1].b);
  }
  return out;
}

Complex amean_from_amplitudes(std::span<const Complex> c) {
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    sum += std::sqrt(static_cast<double>(k + 1)) * std::conj(c[k]) * c[k + 1];
  return sum;
}

double squeezed_variance(double alpha_abs2, double r, double angle_difference) {
  const double sh2 = std::pow(std::sinh(r), 2);
  return alpha_abs2 * (std::cosh(2.0 * r) - std::sinh(2.0 * r) * std::cos(angle_difference)) +
         2.0 * sh2 * (sh2 + 1.0);
}

SqueezedStats squeezed_stats(double nbar, double r, SqueezeAlignment alignment, double angle_difference) {
  const double sh2 = std::pow(std::sinh(r), 2);
  if (!(nbar > sh2)) throw Error(ErrorCode::EnergyBudgetExceeded, "nbar must exceed sinh^2 r");
  double diff = angle_difference;
  if (alignment == SqueezeAlignment::Amplitude) diff = 0.0;
  if (alignment == SqueezeAlignment::Phase) diff = -std::numbers::pi;
  SqueezedStats out;
  out.var_n = squeezed_variance(nbar - sh2, r, diff);
  out.eta_coh = 1.0 - sh2 / nbar;
  out.omega_eff_ratio = std::sqrt(out.eta_coh);
  return out;
}

double amplitude_variance_series(double nbar, double r) { return nbar - 2.0 * nbar * r + (2.0 * nbar + 1.0) * r * r; }

double eta_series(double nbar, double r) { return 1.0 - r * r / nbar; }

double squeezed_vacuum_weight(int m, double r) {
  if (m < 0) return 0.0;
  if (r == 0.0) return m == 0 ? 1.0 : 0.0;
  const double log_w = std::lgamma(2.0 * m + 1.0) - 2.0 * m * std::numbers::ln2 - 2.0 * std::lgamma(m + 1.0) +
                       2.0 * m * std::log(std::tanh(r)) - std::log(std::cosh(r));
  return std::exp(log_w);
}

double squeezed_vacuum_resonant_pe(double r, double g, double t, int m_max) {
  double sum = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    const double s = std::sin(g * std::sqrt(2.0 * m) * t);
    sum += squeezed_vacuum_weight(m, r) * s * s;
  }
  return sum;
}

Complex number_squeezed_amean(std::span<const double> p, double phase) {
  double sum = 0.0;
  for (std::size_t n = 0; n + 1 < p.size(); ++n) sum += std::sqrt(static_cast<double>(n + 1)) * std::sqrt(p[n] * p[n + 1]);
  return std::polar(sum, -phase);
}

}  // namespace glzi::analytics
