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

#include <cmath>
#include <numbers>

#include "glzi/error.hpp"
#include "glzi/odeint.hpp"

using namespace glzi;

namespace {

Vector scalar(double x) {
  Vector v(1);
  v(0) = x;
  return v;
}

// Damped rotating exponential, y = exp((-0.1 - i) t).
double spiral_error(double rtol) {
  IntegratorConfig cfg;
  cfg.rtol = rtol;
  cfg.atol = rtol * 1e-2;
  const Complex lambda(-0.1, -1.0);
  const RhsFunction rhs = [lambda](double, const Vector& y, Vector& dy) { dy = lambda * y; };
  const Vector y = integrate_segment(scalar(1.0), 0.0, 10.0, rhs, cfg);
  return std::abs(y(0) - std::exp(lambda * 10.0));
}

}  // namespace

TEST_CASE("exponential decay") {
  IntegratorConfig cfg;
  IntegrationStats stats;
  const RhsFunction rhs = [](double, const Vector& y, Vector& dy) { dy = -0.1 * y; };
  const Vector y = integrate_segment(scalar(2.0), 0.0, 10.0, rhs, cfg, &stats);
  CHECK(std::abs(y(0).real() / (2.0 * std::exp(-1.0)) - 1.0) < 1e-9);
  CHECK(stats.accepted > 0);
  CHECK(stats.rhs_evals >= 12 * stats.accepted);
}

TEST_CASE("harmonic oscillator over 100 ns") {
  const double w = 2.0 * std::numbers::pi * 0.05;
  const RhsFunction rhs = [w](double, const Vector& y, Vector& dy) {
    dy(0) = y(1);
    dy(1) = -w * w * y(0);
  };
  Vector y0(2);
  y0 << 1.0, 0.0;
  const Vector y = integrate_segment(y0, 0.0, 100.0, rhs, IntegratorConfig{});
  CHECK(std::abs(y(0).real() - std::cos(w * 100.0)) < 1e-7);
  CHECK(std::abs(y(1).real() + w * std::sin(w * 100.0)) < 1e-7);
}

TEST_CASE("time-dependent complex right-hand side") {
  // dy/dt = -i t y  ->  y = exp(-i t^2 / 2)
  const RhsFunction rhs = [](double t, const Vector& y, Vector& dy) { dy = Complex(0.0, -t) * y; };
  IntegratorConfig cfg;
  cfg.rtol = 1e-10;
  cfg.atol = 1e-12;
  const Vector y = integrate_segment(scalar(1.0), 0.0, 5.0, rhs, cfg);
  CHECK(std::abs(y(0) - std::polar(1.0, -12.5)) < 1e-8);
}

TEST_CASE("zero right-hand side keeps the state") {
  Vector y0 = Vector::Random(7);
  const RhsFunction rhs = [](double, const Vector&, Vector& dy) { dy.setZero(); };
  const Vector y = integrate_segment(y0, 1.0, 3.0, rhs, IntegratorConfig{});
  CHECK((y - y0).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("error follows the tolerance") {
  // Per-step control of an order-8 pair gives error ~ tol^(8/9), about 7.7x per decade.
  double previous = spiral_error(1e-4);
  const double first = previous;
  for (double rtol : {1e-5, 1e-6, 1e-7, 1e-8, 1e-9}) {
    const double e = spiral_error(rtol);
    CHECK(e < previous);
    previous = e;
  }
  const double per_decade = std::pow(first / previous, 1.0 / 5.0);
  CHECK(per_decade >= 6.0);
  CHECK(first / spiral_error(1e-6) >= 10.0);
}

TEST_CASE("determinism") {
  const RhsFunction rhs = [](double t, const Vector& y, Vector& dy) { dy = Complex(-0.05, -std::sin(t)) * y; };
  Vector y0 = Vector::Random(3);
  const Vector a = integrate_segment(y0, 0.0, 40.0, rhs, IntegratorConfig{});
  const Vector b = integrate_segment(y0, 0.0, 40.0, rhs, IntegratorConfig{});
  CHECK(a == b);
}

TEST_CASE("failure modes") {
  const RhsFunction stiff = [](double, const Vector& y, Vector& dy) { dy = -1e9 * y; };
  IntegratorConfig cfg;
  cfg.h_min = 1e-3;
  try {
    integrate_segment(scalar(1.0), 0.0, 1.0, stiff, cfg);
    FAIL("expected StepUnderflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StepUnderflow);
  }

  IntegratorConfig few;
  few.max_steps = 3;
  const RhsFunction osc = [](double, const Vector& y, Vector& dy) { dy = Complex(0.0, -5.0) * y; };
  try {
    integrate_segment(scalar(1.0), 0.0, 100.0, osc, few);
    FAIL("expected MaxStepsExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MaxStepsExceeded);
  }

  IntegratorConfig bad;
  bad.rtol = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("sanitize") {
  DensityMatrix rho(2, 2);
  rho << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
  CHECK((sanitize(rho) - rho).cwiseAbs().maxCoeff() <= 1e-16);

  DensityMatrix scaled = rho * (1.0 + 3e-8);
  CHECK(std::abs(sanitize(scaled).trace() - 1.0) < 1e-15);

  DensityMatrix skew = rho;
  skew(0, 1) += Complex(1e-8, 0.0);
  const DensityMatrix s = sanitize(skew);
  CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() == 0.0);

  try {
    sanitize(DensityMatrix::Zero(2, 2));
    FAIL("expected ZeroTrace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroTrace);
  }
}
