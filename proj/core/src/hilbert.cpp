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

#include "glzi/hilbert.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "glzi/error.hpp"

namespace glzi {

void HilbertSpec::validate() const {
  if (n_cut < 1) throw Error(ErrorCode::InvalidArgument, "n_cut must be >= 1");
}

QubitMatrix pauli_x() {
  QubitMatrix m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

QubitMatrix pauli_y() {
  // cos(phi) sx + sin(phi) sy = e^{-i phi} s+ + e^{i phi} s-, s+ = |e><g|.
  const Complex i(0.0, 1.0);
  QubitMatrix m;
  m << 0.0, i, -i, 0.0;
  return m;
}

QubitMatrix pauli_z() {
  QubitMatrix m;
  m << -1.0, 0.0, 0.0, 1.0;
  return m;
}

QubitMatrix qubit_raise() {
  QubitMatrix m = QubitMatrix::Zero();
  m(kExcited, kGround) = 1.0;
  return m;
}

QubitMatrix qubit_lower() {
  QubitMatrix m = QubitMatrix::Zero();
  m(kGround, kExcited) = 1.0;
  return m;
}

ComplexOperator embed_qubit(const HilbertSpec& spec, const QubitMatrix& u) {
  spec.validate();
  const int d = spec.joint_dim();
  ComplexOperator out = ComplexOperator::Zero(d, d);
  for (int n = 0; n < spec.n_cut; ++n)
    out.block<2, 2>(2 * n, 2 * n) = u;
  return out;
}

Operators build_operators(const HilbertSpec& spec) {
  spec.validate();
  const int d = spec.joint_dim();
  Operators ops;
  ops.spec = spec;
  ops.a = ComplexOperator::Zero(d, d);
  ops.n_op = ComplexOperator::Zero(d, d);
  for (int n = 0; n < spec.n_cut; ++n) {
    for (int s = 0; s < 2; ++s) {
      const int k = HilbertSpec::index(n, s);
      ops.n_op(k, k) = static_cast<double>(n);
      if (n >= 1) ops.a(HilbertSpec::index(n - 1, s), k) = std::sqrt(static_cast<double>(n));
    }
  }
  ops.a_dag = ops.a.adjoint();
  ops.sigma_z = embed_qubit(spec, pauli_z());
  ops.sigma_plus = embed_qubit(spec, qubit_raise());
  ops.sigma_minus = embed_qubit(spec, qubit_lower());
  QubitMatrix e_proj = QubitMatrix::Zero();
  e_proj(kExcited, kExcited) = 1.0;
  ops.excited = embed_qubit(spec, e_proj);
  ops.n_tot = ops.n_op + ops.excited;
  return ops;
}

StateVector joint_state(const StateVector& battery, const Eigen::Vector2cd& qubit) {
  StateVector out(2 * battery.size());
  for (Eigen::Index n = 0; n < battery.size(); ++n) {
    out(2 * n) = battery(n) * qubit(0);
    out(2 * n + 1) = battery(n) * qubit(1);
  }
  return out;
}

DensityMatrix pure_density(const StateVector& psi) { return psi * psi.adjoint(); }

Complex expectation(const DensityMatrix& rho, const ComplexOperator& op) {
  if (rho.rows() != rho.cols() || op.rows() != op.cols() || rho.rows() != op.rows())
    throw Error(ErrorCode::DimensionMismatch,
                "rho is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
                    ", operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()));
  // Tr[rho op] = sum_ij rho_ij op_ji
  return (rho.transpose().cwiseProduct(op)).sum();
}

RealExpectation expectation_real(const DensityMatrix& rho, const ComplexOperator& op) {
  const Complex v = expectation(rho, op);
  RealExpectation out;
  out.value = v.real();
  out.imag_residue = std::abs(v.imag());
  out.flagged = out.imag_residue >= 1e-9;
  return out;
}

Matrix reduce_to_battery(const DensityMatrix& rho) {
  const Eigen::Index nb = rho.rows() / 2;
  Matrix out(nb, nb);
  for (Eigen::Index m = 0; m < nb; ++m)
    for (Eigen::Index n = 0; n < nb; ++n)
      out(m, n) = rho(2 * m, 2 * n) + rho(2 * m + 1, 2 * n + 1);
  return out;
}

QubitMatrix reduce_to_qubit(const DensityMatrix& rho) {
  QubitMatrix out = QubitMatrix::Zero();
  for (Eigen::Index n = 0; n < rho.rows() / 2; ++n) out += rho.block<2, 2>(2 * n, 2 * n);
  return out;
}

BatteryObservables battery_observables(const DensityMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() % 2 != 0)
    throw Error(ErrorCode::DimensionMismatch, "joint density matrix must be square of even size");
  BatteryObservables obs;
  double n1 = 0.0;
  double n2 = 0.0;
  Complex a{0.0, 0.0};
  const Eigen::Index nb = rho.rows() / 2;
  for (Eigen::Index n = 0; n < nb; ++n) {
    const double p = (rho(2 * n, 2 * n) + rho(2 * n + 1, 2 * n + 1)).real();
    n1 += static_cast<double>(n) * p;
    n2 += static_cast<double>(n * n) * p;
    if (n + 1 < nb) {
      // <a> = sum_n sqrt(n+1) rho_B(n+1, n)
      const Complex coh = rho(2 * (n + 1), 2 * n) + rho(2 * (n + 1) + 1, 2 * n + 1);
      a += std::sqrt(static_cast<double>(n + 1)) * coh;
    }
  }
  obs.mean_n = n1;
  obs.var_n = n2 - n1 * n1;
  obs.a_mean = a;
  obs.eta_coh = n1 > 0.0 ? std::norm(a) / n1 : 0.0;
  return obs;
}

DensityDiagnostics check_density(const DensityMatrix& rho, double tol_pos) {
  DensityDiagnostics diag;
  if (rho.size() == 0) return diag;
  diag.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  diag.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  diag.min_eigenvalue = es.eigenvalues().minCoeff();
  diag.positivity_violation = diag.min_eigenvalue < -tol_pos;
  return diag;
}

}  // namespace glzi
