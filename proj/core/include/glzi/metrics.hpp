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

#include <span>
#include <vector>

namespace glzi {

struct FringeSample {
  double theta_geo = 0.0;
  double p_e = 0.0;
  double delta_n = 0.0;
  double var_n_init = 0.0;
  double eta_coh_init = 0.0;
};

/// `count` evenly spaced points on [lo, hi], both ends included.
std::vector<double> uniform_grid(double lo, double hi, int count);

/// max - min of P_e over the sampled grid. Throws EmptyInput for fewer than 2 samples.
double contrast(std::span<const FringeSample> samples);
double contrast(std::span<const double> p_e);

struct BackactionSummary {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation over the theta grid
};
BackactionSummary backaction(std::span<const FringeSample> samples);
BackactionSummary backaction(std::span<const double> delta_n);

struct DeficitFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Least-squares line of (c_cl - C) against 1/nbar. Throws DegenerateFit when
/// fewer than two points are given or all 1/nbar coincide.
DeficitFit contrast_deficit_fit(std::span<const double> nbar, std::span<const double> contrast, double c_cl);

}  // namespace glzi
