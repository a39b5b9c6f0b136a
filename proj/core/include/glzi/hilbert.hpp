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

#include <complex>

#include <Eigen/Dense>

namespace glzi {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using QubitMatrix = Eigen::Matrix2cd;

/// Joint operators and density matrices share the dense Matrix type; the
/// aliases only document intent at API boundaries.
using ComplexOperator = Matrix;
using DensityMatrix = Matrix;
using StateVector = Vector;

inline constexpr int kGround = 0;
inline constexpr int kExcited = 1;

/// Truncated battery (x) qubit space. Battery Fock index is the outer index,
/// the qubit the inner one: joint index k = 2 n + s with s = 0 for |g>, 1 for |e>.
struct HilbertSpec {
  int n_cut = 1;

  int joint_dim() const noexcept { return 2 * n_cut; }
  static constexpr int index(int n, int s) noexcept { return 2 * n + s; }
  void validate() const;
};

struct Operators {
  HilbertSpec spec;
  ComplexOperator a;            // a (x) I2
  ComplexOperator a_dag;        // a^dagger (x) I2
  ComplexOperator sigma_z;      // I_B (x) (|e><e| - |g><g|)
  ComplexOperator sigma_plus;   // I_B (x) |e><g|
  ComplexOperator sigma_minus;  // I_B (x) |g><e|
  ComplexOperator n_op;         // a^dagger a (x) I2
  ComplexOperator n_tot;        // n_op + I_B (x) |e><e|
  ComplexOperator excited;      // I_B (x) |e><e|
};

Operators build_operators(const HilbertSpec& spec);

/// Single-qubit Pauli matrices in the {|g>, |e>} ordering.
QubitMatrix pauli_x();
QubitMatrix pauli_y();
QubitMatrix pauli_z();
QubitMatrix qubit_raise();  // |e><g|
QubitMatrix qubit_lower();  // |g><e|

/// I_B (x) u on the joint space.
ComplexOperator embed_qubit(const HilbertSpec& spec, const QubitMatrix& u);

/// |battery> (x) |qubit> in the joint ordering.
StateVector joint_state(const StateVector& battery, const Eigen::Vector2cd& qubit);
DensityMatrix pure_density(const StateVector& psi);

/// Tr[rho op]. Throws DimensionMismatch.
Complex expectation(const DensityMatrix& rho, const ComplexOperator& op);

struct RealExpectation {
  double value = 0.0;
  double imag_residue = 0.0;
  bool flagged = false;  // |Im| above 1e-9 for an operator expected Hermitian
};
RealExpectation expectation_real(const DensityMatrix& rho, const ComplexOperator& op);

struct BatteryObservables {
  double mean_n = 0.0;
  double var_n = 0.0;
  Complex a_mean{0.0, 0.0};
  double eta_coh = 0.0;  // |<a>|^2 / <n>, defined as 0 when <n> = 0
};
BatteryObservables battery_observables(const DensityMatrix& rho);

/// Partial traces of a joint density matrix.
Matrix reduce_to_battery(const DensityMatrix& rho);
QubitMatrix reduce_to_qubit(const DensityMatrix& rho);

struct DensityDiagnostics {
  double hermiticity_defect = 0.0;  // max |rho - rho^dagger|
  double trace_defect = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;
  bool positivity_violation = false;
};

inline constexpr double kPositivityTolerance = 1e-7;

DensityDiagnostics check_density(const DensityMatrix& rho, double tol_pos = kPositivityTolerance);

}  // namespace glzi
