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

#include "glzi/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "glzi/error.hpp"

namespace glzi {

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one point");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

double contrast(std::span<const double> p_e) {
  if (p_e.size() < 2) throw Error(ErrorCode::EmptyInput, "contrast needs at least two samples");
  const auto [lo, hi] = std::minmax_element(p_e.begin(), p_e.end());
  return *hi - *lo;
}

double contrast(std::span<const FringeSample> samples) {
  std::vector<double> p(samples.size());
  std::transform(samples.begin(), samples.end(), p.begin(), [](const FringeSample& s) { return s.p_e; });
  return contrast(std::span<const double>(p));
}

BackactionSummary backaction(std::span<const double> delta_n) {
  if (delta_n.empty()) throw Error(ErrorCode::EmptyInput, "back-action needs at least one sample");
  BackactionSummary out;
  const auto n = static_cast<double>(delta_n.size());
  for (double x : delta_n) out.mean += x;
  out.mean /= n;
  double ss = 0.0;
  for (double x : delta_n) ss += (x - out.mean) * (x - out.mean);
  out.std = std::sqrt(ss / n);
  return out;
}

BackactionSummary backaction(std::span<const FringeSample> samples) {
  std::vector<double> d(samples.size());
  std::transform(samples.begin(), samples.end(), d.begin(), [](const FringeSample& s) { return s.delta_n; });
  return backaction(std::span<const double>(d));
}

DeficitFit contrast_deficit_fit(std::span<const double> nbar, std::span<const double> c, double c_cl) {
  if (nbar.size() != c.size()) throw Error(ErrorCode::DimensionMismatch, "nbar and contrast lists differ in length");
  if (nbar.size() < 2) throw Error(ErrorCode::DegenerateFit, "need at least two points");
  const auto n = static_cast<double>(nbar.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < nbar.size(); ++i) {
    sx += 1.0 / nbar[i];
    sy += c_cl - c[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < nbar.size(); ++i) {
    const double dx = 1.0 / nbar[i] - mx;
    const double dy = (c_cl - c[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 1e-300) throw Error(ErrorCode::DegenerateFit, "all 1/nbar values coincide");
  DeficitFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ss_res = syy - fit.slope * sxy;
  fit.r2 = syy > 0.0 ? 1.0 - std::max(ss_res, 0.0) / syy : 1.0;
  return fit;
}

}  // namespace glzi
