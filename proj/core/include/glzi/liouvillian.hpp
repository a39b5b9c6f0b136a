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

#include <Eigen/SparseCore>

#include "glzi/hilbert.hpp"

namespace glzi {

using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Markovian rates of the joint master equation, all in 1/ns.
struct NoiseParams {
  double gamma1 = 0.0;     // qubit relaxation, 1/T1
  double gamma_phi = 0.0;  // pure dephasing; 1/T2 = gamma1/2 + gamma_phi
  double kappa = 0.0;      // battery loss
  double nth = 0.0;        // thermal occupation of the battery bath

  /// Throws InvalidNoise when T2 > 2 T1 or any input is non-positive.
  static NoiseParams from_times(double t1_ns, double t2_ns, double kappa = 0.0, double nth = 0.0);
  static NoiseParams none() { return {}; }

  void validate() const;
};

/// Column stacking: vec(rho)[i + d j] = rho(i, j), so vec(A rho B) = (B^T (x) A) vec(rho).
Vector vectorize(const Matrix& rho);
Matrix devectorize(const Vector& v);

/// A (x) B as a sparse matrix, skipping exact zeros.
SparseOperator sparse_kron(const Matrix& a, const Matrix& b);

/// -i (I (x) H - H^T (x) I).
SparseOperator hamiltonian_super(const Matrix& h);

/// conj(L) (x) L - 1/2 I (x) L^dag L - 1/2 (L^dag L)^T (x) I.
SparseOperator dissipator_super(const Matrix& l);

struct CollapseTerm {
  double rate = 0.0;
  Matrix op;
};

/// Generator L(t) = L0 + delta(t) Ldelta on vectorized density matrices.
class Liouvillian {
 public:
  Liouvillian() = default;
  Liouvillian(SparseOperator l0, SparseOperator l_delta, int dim);

  int dim() const noexcept { return dim_; }
  const SparseOperator& l0() const noexcept { return l0_; }
  const SparseOperator& l_delta() const noexcept { return l_delta_; }

  /// out = (L0 + delta Ldelta) x
  void apply(double delta, const Vector& x, Vector& out) const;
  SparseOperator at(double delta) const;

 private:
  SparseOperator l0_;
  SparseOperator l_delta_;
  Vector l_delta_diagonal_;  // used when Ldelta is diagonal (it is for sigma_z / 2)
  bool delta_is_diagonal_ = false;
  int dim_ = 0;
};

Liouvillian assemble_generic(const Matrix& h0, const Matrix& h_delta, std::span<const CollapseTerm> collapse);

/// Joint qubit-battery generator with H0 = g (a s+ + a^dag s-), Hdelta = s_z / 2
/// and the relaxation, dephasing and battery loss channels.
Liouvillian assemble(const Operators& ops, double g, const NoiseParams& noise);

/// Two-level generator for a classical transverse drive (Omega/2)(cos phi sx + sin phi sy);
/// only qubit relaxation and dephasing.
Liouvillian assemble_classical(double omega, double drive_phase, const NoiseParams& noise);

}  // namespace glzi
