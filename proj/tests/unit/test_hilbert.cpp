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

#include "glzi/battery.hpp"
#include "glzi/error.hpp"
#include "glzi/hilbert.hpp"
#include "glzi/protocol.hpp"

using namespace glzi;

namespace {

DensityMatrix basis_density(int n_cut, int n, int s) {
  StateVector psi = StateVector::Zero(2 * n_cut);
  psi(HilbertSpec::index(n, s)) = 1.0;
  return pure_density(psi);
}

}  // namespace

TEST_CASE("ladder matrix elements") {
  const auto ops2 = build_operators({2});
  CHECK(std::abs(ops2.a(HilbertSpec::index(0, kGround), HilbertSpec::index(1, kGround)) - 1.0) < 1e-15);

  const auto ops4 = build_operators({4});
  const Complex el = ops4.a(HilbertSpec::index(2, kExcited), HilbertSpec::index(3, kExcited));
  CHECK(el.real() == doctest::Approx(1.7320508).epsilon(1e-7));
  CHECK(ops4.a_dag.isApprox(ops4.a.adjoint()));
}

TEST_CASE("number operators are diagonal with the expected eigenvalues") {
  const int n_cut = 7;
  const auto ops = build_operators({n_cut});
  const ComplexOperator off = ops.n_op - ComplexOperator(ops.n_op.diagonal().asDiagonal());
  CHECK(off.norm() == 0.0);
  for (int n = 0; n < n_cut; ++n) {
    CHECK(ops.n_op(HilbertSpec::index(n, kGround), HilbertSpec::index(n, kGround)).real() == n);
    CHECK(ops.n_tot(HilbertSpec::index(n, kGround), HilbertSpec::index(n, kGround)).real() == n);
    if (n >= 1) CHECK(ops.n_tot(HilbertSpec::index(n - 1, kExcited), HilbertSpec::index(n - 1, kExcited)).real() == n);
  }
}

TEST_CASE("Jaynes-Cummings part commutes with N_tot, the echo does not") {
  const auto ops = build_operators({6});
  const double g = 0.07;
  for (double delta : {0.0, 0.3, -1.7}) {
    const ComplexOperator h = g * (ops.a * ops.sigma_plus + ops.a_dag * ops.sigma_minus) + 0.5 * delta * ops.sigma_z;
    CHECK((h * ops.n_tot - ops.n_tot * h).norm() < 1e-12);
    CHECK((h - h.adjoint()).norm() < 1e-12 * h.norm());
  }
  const ComplexOperator u = embed_qubit(ops.spec, echo_unitary(0.0));
  CHECK((u * ops.n_tot - ops.n_tot * u).norm() > 0.1);
}

TEST_CASE("expectation values") {
  const int n_cut = 6;
  const auto ops = build_operators({n_cut});
  CHECK(std::abs(expectation(basis_density(n_cut, 0, kGround), ops.n_tot)) == 0.0);
  CHECK(expectation(basis_density(n_cut, 3, kExcited), ops.n_tot).real() == doctest::Approx(4.0));

  const int nc = compute_cutoff(Coherent{5.0, 0.0});
  const auto big = build_operators({nc});
  const auto rho = pure_density(joint_state(build_coherent(5.0, 0.0, nc), {1.0, 0.0}));
  const auto n = expectation_real(rho, big.n_op);
  CHECK(std::abs(n.value - 5.0) < 1e-6);
  CHECK_FALSE(n.flagged);

  CHECK_THROWS_AS(expectation(rho, ops.n_op), Error);
  try {
    expectation(rho, ops.n_op);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("battery observables") {
  {
    const int nc = compute_cutoff(Coherent{5.0, 0.4});
    const auto obs = battery_observables(pure_density(joint_state(build_coherent(5.0, 0.4, nc), {1.0, 0.0})));
    CHECK(std::abs(obs.mean_n - 5.0) < 1e-6);
    CHECK(std::abs(obs.var_n - 5.0) < 1e-6);
    CHECK(std::abs(std::abs(obs.a_mean) - std::sqrt(5.0)) < 1e-6);
    CHECK(std::abs(std::arg(obs.a_mean) + 0.4) < 1e-9);
    CHECK(std::abs(obs.eta_coh - 1.0) < 1e-6);
  }
  {
    const SqueezedVacuum sv{0.5, 0.0};
    const int nc = compute_cutoff(sv);
    const auto obs = battery_observables(pure_density(joint_state(build_squeezed_vacuum(0.5, 0.0, nc), {1.0, 0.0})));
    CHECK(std::abs(obs.a_mean) == 0.0);
    CHECK(obs.eta_coh == 0.0);
  }
  {
    const auto obs = battery_observables(pure_density(joint_state(build_fock(3, 6), {1.0, 0.0})));
    CHECK(obs.mean_n == doctest::Approx(3.0));
    CHECK(std::abs(obs.var_n) < 1e-12);
    CHECK(obs.eta_coh == 0.0);
  }
  {
    // vacuum: eta_coh defined as 0
    const auto obs = battery_observables(basis_density(4, 0, kGround));
    CHECK(obs.mean_n == 0.0);
    CHECK(obs.eta_coh == 0.0);
  }
}

TEST_CASE("partial trace consistency") {
  const int nc = 12;
  StateVector psi = StateVector::Random(2 * nc);
  psi.normalize();
  const auto rho = pure_density(psi);
  const auto ops = build_operators({nc});
  const Matrix rb = reduce_to_battery(rho);
  double n_reduced = 0.0;
  for (int n = 0; n < nc; ++n) n_reduced += n * rb(n, n).real();
  CHECK(std::abs(expectation(rho, ops.n_op).real() - n_reduced) < 1e-12);
  CHECK(std::abs(battery_observables(rho).mean_n - n_reduced) < 1e-12);
  CHECK(std::abs(reduce_to_qubit(rho).trace() - 1.0) < 1e-12);
  // <a> via the operator and via the reduced coherences
  CHECK(std::abs(expectation(rho, ops.a) - battery_observables(rho).a_mean) < 1e-12);
}

TEST_CASE("density diagnostics") {
  const int d = 6;
  const DensityMatrix mixed = DensityMatrix::Identity(d, d) / static_cast<double>(d);
  const auto ok = check_density(mixed);
  CHECK(ok.hermiticity_defect == 0.0);
  CHECK(ok.trace_defect < 1e-15);
  CHECK(ok.min_eigenvalue == doctest::Approx(1.0 / d));
  CHECK_FALSE(ok.positivity_violation);

  const auto low = check_density(mixed * 0.98);
  CHECK(low.trace_defect == doctest::Approx(0.02));

  DensityMatrix bad = DensityMatrix::Zero(2, 2);
  bad(0, 0) = 1.1;
  bad(1, 1) = -0.1;
  CHECK(check_density(bad).positivity_violation);
}

TEST_CASE("qubit operators") {
  const QubitMatrix x = pauli_x();
  const QubitMatrix y = pauli_y();
  for (double phi : {0.0, 0.3, 2.0}) {
    const QubitMatrix lhs = std::cos(phi) * x + std::sin(phi) * y;
    const QubitMatrix rhs = std::polar(1.0, -phi) * qubit_raise() + std::polar(1.0, phi) * qubit_lower();
    CHECK((lhs - rhs).norm() < 1e-15);
  }
  CHECK((pauli_z() - (qubit_raise() * qubit_lower() - qubit_lower() * qubit_raise())).norm() < 1e-15);
  CHECK_THROWS_AS(build_operators({0}), Error);
}
