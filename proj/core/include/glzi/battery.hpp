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
#include <variant>

#include "glzi/hilbert.hpp"

namespace glzi {

/// How the squeezing ellipse is oriented relative to the displacement.
enum class SqueezeAlignment {
  Amplitude,  // theta_s = 2 phi_alpha, reduced number variance
  Phase,      // theta_s = 2 phi_alpha + pi, increased number variance
  Angle,      // explicit theta_s
};

// All battery phases follow alpha = |alpha| e^{-i phase}; when the protocol
// drives the battery the phase is theta_geo - pi/2.

struct Coherent {
  double nbar = 0.0;
  double phase = 0.0;
};

/// D(alpha) S(zeta)|0> at fixed total energy nbar = |alpha|^2 + sinh^2 r.
struct DisplacedSqueezed {
  double nbar = 0.0;
  double r = 0.0;
  double phase = 0.0;
  SqueezeAlignment alignment = SqueezeAlignment::Amplitude;
  double squeeze_angle = 0.0;  // only read for SqueezeAlignment::Angle
};

/// Truncated discrete Gaussian in photon number, width q sqrt(nbar), with a
/// uniform phase e^{-i phase} between neighboring Fock components.
struct NumberSqueezedGaussian {
  double nbar = 0.0;
  double q = 1.0;
  double phase = 0.0;
};

struct Fock {
  int n = 0;
};

struct SqueezedVacuum {
  double r = 0.0;
  double squeeze_angle = 0.0;
};

using BatteryStateSpec =
    std::variant<Coherent, DisplacedSqueezed, NumberSqueezedGaussian, Fock, SqueezedVacuum>;

/// Nominal mean photon number of the spec (exact for every variant).
double mean_photons(const BatteryStateSpec& spec);

/// Copy of `spec` with its battery phase replaced; phase-free variants are returned unchanged.
BatteryStateSpec with_phase(const BatteryStateSpec& spec, double phase);

/// Short stable descriptor used in file names and CSV columns, e.g. "coherent_nbar5".
std::string describe(const BatteryStateSpec& spec);

inline constexpr double kTailThreshold = 1e-8;

StateVector build_coherent(double nbar, double phase, int n_cut);
StateVector build_displaced_squeezed(const DisplacedSqueezed& spec, int n_cut);
StateVector build_number_squeezed(double nbar, double q, double phase, int n_cut);
StateVector build_fock(int n, int n_cut);
StateVector build_squeezed_vacuum(double r, double squeeze_angle, int n_cut);

StateVector build_battery(const BatteryStateSpec& spec, int n_cut);

/// Fock truncation for the variant.
int compute_cutoff(const BatteryStateSpec& spec);

/// Width used for number-squeezed states: max(0.2, q sqrt(nbar)).
double number_squeezed_width(double nbar, double q);

/// Photon statistics computed directly from battery amplitudes.
BatteryObservables battery_statistics(const StateVector& amplitudes);

}  // namespace glzi
