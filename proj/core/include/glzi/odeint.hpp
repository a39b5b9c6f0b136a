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

#include "glzi/hilbert.hpp"

namespace glzi {

struct IntegratorConfig {
  double rtol = 2e-7;
  double atol = 2e-9;
  double h_init = 0.1;  // ns
  double h_min = 1e-6;  // ns
  double h_max = 0.0;   // ns; 0 means the segment length
  long max_steps = 200000;

  void validate() const;
};

struct IntegrationStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evals = 0;

  IntegrationStats& operator+=(const IntegrationStats& o) {
    accepted += o.accepted;
    rejected += o.rejected;
    rhs_evals += o.rhs_evals;
    return *this;
  }
};

/// dy = f(t, y). Implementations write into `dy`, which is pre-sized.
using RhsFunction = std::function<void(double t, const Vector& y, Vector& dy)>;

/// Adaptive Dormand-Prince 8(5,3) integration from t0 to exactly t1.
///
/// Local error is measured in the scaled RMS norm with weights
/// atol + rtol max(|y_old|, |y_new|); rejected steps are at least halved.
/// Throws StepUnderflow when a rejection drives h below h_min and
/// MaxStepsExceeded after cfg.max_steps attempts.
Vector integrate_segment(const Vector& y0, double t0, double t1, const RhsFunction& rhs,
                         const IntegratorConfig& cfg, IntegrationStats* stats = nullptr);

/// rho <- (rho + rho^dag)/2, then rho <- rho / Tr rho. Throws ZeroTrace if |Tr rho| < 1e-6.
DensityMatrix sanitize(const DensityMatrix& rho);

}  // namespace glzi
