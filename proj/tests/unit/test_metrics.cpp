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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "glzi/error.hpp"
#include "glzi/metrics.hpp"

using namespace glzi;

TEST_CASE("uniform grid") {
  const auto g = uniform_grid(0.0, 2.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 2.0);
  CHECK(g[1] == doctest::Approx(0.5));
  CHECK(uniform_grid(1.0, 2.0, 1) == std::vector<double>{1.0});
}

TEST_CASE("contrast") {
  const std::vector<double> flat(7, 0.3);
  CHECK(contrast(flat) == 0.0);

  const double a = 0.8;
  const auto thetas = uniform_grid(0.0, 2 * std::numbers::pi, 101);
  std::vector<FringeSample> samples;
  for (double th : thetas) samples.push_back({th, 1.0 - a * std::pow(std::sin(th), 2), 0.0, 0.0, 0.0});
  CHECK(std::abs(contrast(samples) - a) < std::pow(std::numbers::pi * a / 100.0, 2));

  // Cyclic shift of a periodic grid (dropping the duplicated endpoint) leaves C unchanged.
  std::vector<double> pe;
  for (const auto& s : samples) pe.push_back(s.p_e);
  pe.pop_back();
  std::vector<double> shifted = pe;
  std::rotate(shifted.begin(), shifted.begin() + 17, shifted.end());
  CHECK(contrast(shifted) == contrast(pe));
  CHECK(contrast(pe) >= 0.0);

  CHECK_THROWS_AS(contrast(std::vector<double>{0.5}), Error);
  CHECK_THROWS_AS(contrast(std::vector<FringeSample>{}), Error);
}

TEST_CASE("backaction") {
  const std::vector<double> zeros(11, 0.0);
  CHECK(backaction(zeros).mean == 0.0);
  CHECK(backaction(zeros).std == 0.0);

  const std::vector<double> dn = {1.0, 2.0, 3.0, 4.0};
  const auto s = backaction(dn);
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.std == doctest::Approx(std::sqrt(1.25)));  // population normalization

  std::vector<FringeSample> samples(5);
  for (auto& x : samples) x.delta_n = 5.0 * (1.0 - std::exp(-0.01));
  CHECK(backaction(samples).mean == doctest::Approx(0.04975).epsilon(1e-4));
  CHECK(backaction(samples).std == 0.0);
  CHECK_THROWS_AS(backaction(std::vector<double>{}), Error);
}

TEST_CASE("contrast deficit fit") {
  const double c_cl = 0.6;
  const double k = 0.2;
  const std::vector<double> nbar = {3.0, 5.0, 7.5, 10.0, 15.0};
  std::vector<double> c;
  for (double n : nbar) c.push_back(c_cl - k / n);
  const auto fit = contrast_deficit_fit(nbar, c, c_cl);
  CHECK(fit.slope == doctest::Approx(k).epsilon(1e-12));
  CHECK(std::abs(fit.intercept) < 1e-12);
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> same_n = {4.0, 4.0};
  const std::vector<double> same_c = {0.5, 0.5};
  try {
    contrast_deficit_fit(same_n, same_c, c_cl);
    FAIL("expected DegenerateFit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateFit);
  }
  CHECK_THROWS_AS(contrast_deficit_fit(std::vector<double>{2.0}, std::vector<double>{0.3}, c_cl), Error);
}
