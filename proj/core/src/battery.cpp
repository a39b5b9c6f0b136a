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

#include "glzi/battery.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "glzi/error.hpp"

namespace glzi {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_cutoff(int n_cut) {
  if (n_cut < 1) throw Error(ErrorCode::InvalidArgument, "n_cut must be >= 1");
}

// Renormalizes in place after checking the discarded probability.
void finish_truncation(StateVector& psi, double kept_probability, const char* what) {
  const double tail = 1.0 - kept_probability;
  if (tail >= kTailThreshold) {
    std::ostringstream os;
    os << what << ": truncation tail " << tail << " exceeds " << kTailThreshold;
    throw Error(ErrorCode::CutoffTooSmall, os.str());
  }
  psi /= psi.norm();
}

std::string format_number(double x) {
  std::ostringstream os;
  os << x;
  std::string s = os.str();
  for (auto& ch : s)
    if (ch == '.') ch = 'p';
  return s;
}

// Squeezed-vacuum Fock amplitudes on [0, dim), no renormalization.
StateVector squeezed_vacuum_raw(double r, double squeeze_angle, int dim) {
  StateVector psi = StateVector::Zero(dim);
  psi(0) = 1.0 / std::sqrt(std::cosh(r));
  if (r == 0.0) return psi;
  const double log_t = std::log(std::tanh(r));
  const double log_norm = -0.5 * std::log(std::cosh(r));
  const Complex unit = -std::polar(1.0, squeeze_angle);
  for (int m = 1; 2 * m < dim; ++m) {
    const double log_mag = log_norm + m * log_t + 0.5 * std::lgamma(2.0 * m + 1.0) -
                           m * std::numbers::ln2 - std::lgamma(m + 1.0);
    psi(2 * m) = std::exp(log_mag) * std::pow(unit, m);
  }
  return psi;
}

}  // namespace

double number_squeezed_width(double nbar, double q) { return std::max(0.2, q * std::sqrt(nbar)); }

double mean_photons(const BatteryStateSpec& spec) {
  return std::visit(Overloaded{
                        [](const Coherent& s) { return s.nbar; },
                        [](const DisplacedSqueezed& s) { return s.nbar; },
                        [](const NumberSqueezedGaussian& s) { return s.nbar; },
                        [](const Fock& s) { return static_cast<double>(s.n); },
                        [](const SqueezedVacuum& s) { return std::pow(std::sinh(s.r), 2); },
                    },
                    spec);
}

BatteryStateSpec with_phase(const BatteryStateSpec& spec, double phase) {
  return std::visit(Overloaded{
                        [&](Coherent s) -> BatteryStateSpec { s.phase = phase; return s; },
                        [&](DisplacedSqueezed s) -> BatteryStateSpec { s.phase = phase; return s; },
                        [&](NumberSqueezedGaussian s) -> BatteryStateSpec { s.phase = phase; return s; },
                        [](Fock s) -> BatteryStateSpec { return s; },
                        [](SqueezedVacuum s) -> BatteryStateSpec { return s; },
                    },
                    spec);
}

std::string describe(const BatteryStateSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Coherent& s) { return "coherent_nbar" + format_number(s.nbar); },
          [](const DisplacedSqueezed& s) {
            const char* kind = s.alignment == SqueezeAlignment::Amplitude ? "amp_squeezed"
                               : s.alignment == SqueezeAlignment::Phase   ? "phase_squeezed"
                                                                          : "squeezed";
            return std::string(kind) + "_nbar" + format_number(s.nbar) + "_r" + format_number(s.r);
          },
          [](const NumberSqueezedGaussian& s) {
            return "number_squeezed_nbar" + format_number(s.nbar) + "_q" + format_number(s.q);
          },
          [](const Fock& s) { return "fock_n" + std::to_string(s.n); },
          [](const SqueezedVacuum& s) { return "squeezed_vacuum_r" + format_number(s.r); },
      },
      spec);
}

StateVector build_coherent(double nbar, double phase, int n_cut) {
  require_cutoff(n_cut);
  if (nbar < 0.0) throw Error(ErrorCode::InvalidArgument, "nbar must be >= 0");
  StateVector psi = StateVector::Zero(n_cut);
  if (nbar == 0.0) {
    psi(0) = 1.0;
    return psi;
  }
  double kept = 0.0;
  const double log_nbar = std::log(nbar);
  for (int n = 0; n < n_cut; ++n) {
    const double log_mag = -0.5 * nbar + 0.5 * n * log_nbar - 0.5 * std::lgamma(n + 1.0);
    const double mag = std::exp(log_mag);
    psi(n) = std::polar(mag, -n * phase);
    kept += mag * mag;
  }
  finish_truncation(psi, kept, "coherent state");
  return psi;
}

namespace {

// Displaced squeezed amplitudes in a work space of the given size (not truncated or renormalized).
StateVector displaced_squeezed_raw(const DisplacedSqueezed& spec, int work) {
  const double sh2 = std::pow(std::sinh(spec.r), 2);
  if (spec.r < 0.0) throw Error(ErrorCode::InvalidArgument, "squeezing r must be >= 0");
  if (!(spec.nbar > sh2))
    throw Error(ErrorCode::EnergyBudgetExceeded, "nbar must exceed sinh^2 r");

  const Complex alpha = std::polar(std::sqrt(spec.nbar - sh2), -spec.phase);
  const double phi_alpha = -spec.phase;
  double theta_s = spec.squeeze_angle;
  if (spec.alignment == SqueezeAlignment::Amplitude) theta_s = 2.0 * phi_alpha;
  if (spec.alignment == SqueezeAlignment::Phase) theta_s = 2.0 * phi_alpha + std::numbers::pi;

  const StateVector vac = squeezed_vacuum_raw(spec.r, theta_s, work);
  Matrix a = Matrix::Zero(work, work);
  for (int n = 1; n < work; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  const Matrix generator = alpha * a.adjoint() - std::conj(alpha) * a;
  return generator.exp() * vac;
}

}  // namespace

StateVector build_displaced_squeezed(const DisplacedSqueezed& spec, int n_cut) {
  require_cutoff(n_cut);
  // Work in an enlarged space so the displacement's edge effects and the
  // truncation tail can both be measured before cutting back to n_cut.
  const StateVector full = displaced_squeezed_raw(spec, 2 * n_cut + 24);
  StateVector psi = full.head(n_cut);
  finish_truncation(psi, psi.squaredNorm() / full.squaredNorm(), "displaced squeezed state");
  return psi;
}

StateVector build_number_squeezed(double nbar, double q, double phase, int n_cut) {
  require_cutoff(n_cut);
  if (!(nbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "nbar must be > 0");
  if (!(q > 0.0)) throw Error(ErrorCode::InvalidArgument, "q must be > 0");
  const double sigma = number_squeezed_width(nbar, q);

  std::vector<double> p(static_cast<std::size_t>(n_cut));
  auto distribution_mean = [&](double mu) {
    double z = 0.0;
    double m = 0.0;
    for (int n = 0; n < n_cut; ++n) {
      const double x = (n - mu) / sigma;
      p[static_cast<std::size_t>(n)] = std::exp(-0.5 * x * x);
      z += p[static_cast<std::size_t>(n)];
    }
    for (int n = 0; n < n_cut; ++n) {
      p[static_cast<std::size_t>(n)] /= z;
      m += n * p[static_cast<std::size_t>(n)];
    }
    return m;
  };

  double lo = 0.0;
  double hi = static_cast<double>(n_cut);
  if (distribution_mean(lo) > nbar || distribution_mean(hi) < nbar)
    throw Error(ErrorCode::MeanUnreachable,
                "no Gaussian center in [0, n_cut] reproduces nbar=" + std::to_string(nbar));
  // Mean is monotone in mu; bisect to machine resolution.
  for (int it = 0; it < 200 && hi - lo > 1e-15 * n_cut; ++it) {
    const double mid = 0.5 * (lo + hi);
    (distribution_mean(mid) < nbar ? lo : hi) = mid;
  }
  const double achieved = distribution_mean(0.5 * (lo + hi));
  if (std::abs(achieved - nbar) > 1e-9)
    throw Error(ErrorCode::MeanUnreachable, "bisection did not reach the target mean");

  StateVector psi(n_cut);
  for (int n = 0; n < n_cut; ++n) psi(n) = std::polar(std::sqrt(p[static_cast<std::size_t>(n)]), -n * phase);
  psi /= psi.norm();
  return psi;
}

StateVector build_fock(int n, int n_cut) {
  require_cutoff(n_cut);
  if (n < 0 || n >= n_cut)
    throw Error(ErrorCode::IndexOutOfRange,
                "Fock index " + std::to_string(n) + " outside [0, " + std::to_string(n_cut) + ")");
  StateVector psi = StateVector::Zero(n_cut);
  psi(n) = 1.0;
  return psi;
}

StateVector build_squeezed_vacuum(double r, double squeeze_angle, int n_cut) {
  require_cutoff(n_cut);
  if (r < 0.0) throw Error(ErrorCode::InvalidArgument, "squeezing r must be >= 0");
  StateVector psi = squeezed_vacuum_raw(r, squeeze_angle, n_cut);
  finish_truncation(psi, psi.squaredNorm(), "squeezed vacuum");
  return psi;
}

StateVector build_battery(const BatteryStateSpec& spec, int n_cut) {
  return std::visit(Overloaded{
                        [&](const Coherent& s) { return build_coherent(s.nbar, s.phase, n_cut); },
                        [&](const DisplacedSqueezed& s) { return build_displaced_squeezed(s, n_cut); },
                        [&](const NumberSqueezedGaussian& s) {
                          return build_number_squeezed(s.nbar, s.q, s.phase, n_cut);
                        },
                        [&](const Fock& s) { return build_fock(s.n, n_cut); },
                        [&](const SqueezedVacuum& s) {
                          return build_squeezed_vacuum(s.r, s.squeeze_angle, n_cut);
                        },
                    },
                    spec);
}

int compute_cutoff(const BatteryStateSpec& spec) {
  auto ceil_int = [](double x) { return static_cast<int>(std::ceil(x - 1e-12)); };
  return std::visit(
      Overloaded{
          [&](const Coherent& s) {
            return std::max(8, ceil_int(s.nbar + 5.0 * std::sqrt(s.nbar + 1.0) + 8.0));
          },
          [&](const DisplacedSqueezed& s) {
            const double sh2 = std::pow(std::sinh(s.r), 2);
            const double neff = s.nbar + 4.0 * sh2 + 2.0;
            const int base = std::max(12, ceil_int(neff + 7.0 * std::sqrt(neff + 1.0) + 8.0));
            int n_cut = base;
            if (s.alignment != SqueezeAlignment::Amplitude) {
              // Anti-squeezed number distributions are wider and skewed; cover ten standard deviations.
              const double diff = s.alignment == SqueezeAlignment::Phase ? -std::numbers::pi
                                                                         : -2.0 * s.phase - s.squeeze_angle;
              const double alpha2 = std::max(0.0, s.nbar - sh2);
              const double var = alpha2 * (std::cosh(2.0 * s.r) - std::sinh(2.0 * s.r) * std::cos(diff)) +
                                 2.0 * sh2 * (sh2 + 1.0);
              n_cut = std::max(base, ceil_int(s.nbar + 10.0 * std::sqrt(var) + 8.0));
            }
            // The squeezed tail can still exceed the estimate at large r; grow until it is 100x below threshold.
            const StateVector full = displaced_squeezed_raw(s, 4 * n_cut + 24);
            const double total = full.squaredNorm();
            while (n_cut < full.size() && 1.0 - full.head(n_cut).squaredNorm() / total >= 1e-2 * kTailThreshold)
              n_cut += 2;
            return n_cut;
          },
          [&](const NumberSqueezedGaussian& s) {
            const double sigma = number_squeezed_width(s.nbar, s.q);
            return std::max(10, ceil_int(s.nbar + 8.0 * sigma + 10.0));
          },
          [](const Fock& s) { return s.n + 3; },
          [](const SqueezedVacuum& s) {
            // Heavy tanh^{2m} tail: grow until the discarded weight is 100x below threshold.
            int n_cut = 12;
            while (true) {
              const StateVector psi = squeezed_vacuum_raw(s.r, 0.0, n_cut);
              if (1.0 - psi.squaredNorm() < 1e-2 * kTailThreshold || n_cut > 4096) return n_cut;
              n_cut += 2;
            }
          },
      },
      spec);
}

BatteryObservables battery_statistics(const StateVector& c) {
  BatteryObservables obs;
  double n1 = 0.0;
  double n2 = 0.0;
  Complex a{0.0, 0.0};
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    const double p = std::norm(c(n));
    n1 += n * p;
    n2 += static_cast<double>(n * n) * p;
    if (n + 1 < c.size()) a += std::sqrt(static_cast<double>(n + 1)) * std::conj(c(n)) * c(n + 1);
  }
  obs.mean_n = n1;
  obs.var_n = n2 - n1 * n1;
  obs.a_mean = a;
  obs.eta_coh = n1 > 0.0 ? std::norm(a) / n1 : 0.0;
  return obs;
}

}  // namespace glzi
