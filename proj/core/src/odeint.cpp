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

#include "glzi/odeint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "dop853_tableau.hpp"
#include "glzi/error.hpp"

namespace glzi {
namespace {

constexpr double kSafety = 0.9;
constexpr double kBeta = 0.04;                    // PI memory term
constexpr double kAlpha = 1.0 / 8.0 - 0.2 * kBeta;  // order-8 controller exponent
constexpr double kMinFactor = 0.333;
constexpr double kMaxFactor = 6.0;

}  // namespace

void IntegratorConfig::validate() const {
  if (!(rtol > 0.0) || !(atol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "rtol and atol must be positive");
  if (!(h_min > 0.0) || !(h_init >= h_min) || (h_max > 0.0 && h_max < h_init))
    throw Error(ErrorCode::InvalidArgument, "need 0 < h_min <= h_init <= h_max");
  if (max_steps <= 0) throw Error(ErrorCode::InvalidArgument, "max_steps must be positive");
}

Vector integrate_segment(const Vector& y0, double t0, double t1, const RhsFunction& rhs,
                         const IntegratorConfig& cfg, IntegrationStats* stats) {
  using namespace detail;
  cfg.validate();
  if (!(t1 > t0)) throw Error(ErrorCode::InvalidArgument, "integration window must have t1 > t0");

  const Eigen::Index n = y0.size();
  const double h_max = cfg.h_max > 0.0 ? std::min(cfg.h_max, t1 - t0) : t1 - t0;
  IntegrationStats local;

  std::array<Vector, kDopStages + 1> k;
  for (auto& ki : k) ki.resize(n);
  Vector y = y0;
  Vector y_stage(n);
  Vector y_new(n);
  Vector err5(n);
  Vector err3(n);

  double t = t0;
  double h = std::min(cfg.h_init, h_max);
  double err_prev = 1e-4;
  long attempts = 0;

  rhs(t, y, k[0]);
  ++local.rhs_evals;

  while (t < t1) {
    if (++attempts > cfg.max_steps) {
      std::ostringstream os;
      os << "exceeded " << cfg.max_steps << " steps at t=" << t;
      throw Error(ErrorCode::MaxStepsExceeded, os.str());
    }
    bool last = false;
    if (t + h >= t1 || (t1 - (t + h)) < 1e-12 * std::max(1.0, std::abs(t1))) {
      h = t1 - t;
      last = true;
    }

    for (int i = 1; i < kDopStages; ++i) {
      y_stage = y;
      for (int j = 0; j < i; ++j)
        if (kDopA[i][j] != 0.0) y_stage += (h * kDopA[i][j]) * k[j];
      rhs(t + kDopC[i] * h, y_stage, k[i]);
    }
    y_new = y;
    for (int j = 0; j < kDopStages; ++j)
      if (kDopB[j] != 0.0) y_new += (h * kDopB[j]) * k[j];
    rhs(t + h, y_new, k[kDopStages]);
    local.rhs_evals += kDopStages;

    err5.setZero();
    err3.setZero();
    for (int j = 0; j <= kDopStages; ++j) {
      if (kDopE5[j] != 0.0) err5 += kDopE5[j] * k[j];
      if (kDopE3[j] != 0.0) err3 += kDopE3[j] * k[j];
    }
    double e5 = 0.0;
    double e3 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double sc = cfg.atol + cfg.rtol * std::max(std::abs(y(i)), std::abs(y_new(i)));
      e5 += std::norm(err5(i)) / (sc * sc);
      e3 += std::norm(err3(i)) / (sc * sc);
    }
    double err = 0.0;
    if (e5 > 0.0 || e3 > 0.0) err = std::abs(h) * e5 / std::sqrt((e5 + 0.01 * e3) * static_cast<double>(n));

    if (err <= 1.0) {
      ++local.accepted;
      t = last ? t1 : t + h;
      y.swap(y_new);
      k[0].swap(k[kDopStages]);
      double factor = kMaxFactor;
      if (err > 0.0)
        factor = std::clamp(kSafety * std::pow(err, -kAlpha) * std::pow(err_prev, kBeta), kMinFactor, kMaxFactor);
      err_prev = std::max(err, 1e-4);
      h = std::min(h * factor, h_max);
    } else {
      ++local.rejected;
      const double shrink = std::clamp(kSafety * std::pow(err, -1.0 / 8.0), 0.1, 0.5);
      h *= shrink;
      if (h < cfg.h_min) {
        std::ostringstream os;
        os << "step size " << h << " ns below h_min " << cfg.h_min << " at t=" << t;
        throw Error(ErrorCode::StepUnderflow, os.str());
      }
    }
  }

  if (stats) *stats += local;
  return y;
}

DensityMatrix sanitize(const DensityMatrix& rho) {
  DensityMatrix out = 0.5 * (rho + rho.adjoint());
  const Complex tr = out.trace();
  if (std::abs(tr) < 1e-6) throw Error(ErrorCode::ZeroTrace, "cannot renormalize a traceless density matrix");
  out /= tr.real();
  return out;
}

}  // namespace glzi
