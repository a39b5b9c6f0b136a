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

#include "glzi/liouvillian.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "glzi/error.hpp"

namespace glzi {

NoiseParams NoiseParams::from_times(double t1_ns, double t2_ns, double kappa, double nth) {
  if (!(t1_ns > 0.0) || !(t2_ns > 0.0))
    throw Error(ErrorCode::InvalidNoise, "T1 and T2 must be positive");
  if (t2_ns > 2.0 * t1_ns)
    throw Error(ErrorCode::InvalidNoise, "T2 must not exceed 2 T1");
  NoiseParams p;
  p.gamma1 = 1.0 / t1_ns;
  p.gamma_phi = 1.0 / t2_ns - 0.5 * p.gamma1;
  p.kappa = kappa;
  p.nth = nth;
  p.validate();
  return p;
}

void NoiseParams::validate() const {
  if (gamma1 < 0.0 || gamma_phi < 0.0 || kappa < 0.0 || nth < 0.0)
    throw Error(ErrorCode::InvalidNoise, "rates and thermal occupation must be non-negative");
}

Vector vectorize(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw Error(ErrorCode::DimensionMismatch, "rho must be square");
  return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix devectorize(const Vector& v) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d * d != v.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " is not a vectorized square matrix");
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

SparseOperator sparse_kron(const Matrix& a, const Matrix& b) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (Eigen::Index k = 0; k < br; ++k)
        for (Eigen::Index l = 0; l < bc; ++l) {
          const Complex bkl = b(k, l);
          if (bkl == Complex(0.0, 0.0)) continue;
          triplets.emplace_back(static_cast<int>(i * br + k), static_cast<int>(j * bc + l), aij * bkl);
        }
    }
  SparseOperator out(a.rows() * br, a.cols() * bc);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

SparseOperator hamiltonian_super(const Matrix& h) {
  const Matrix id = Matrix::Identity(h.rows(), h.cols());
  const Complex minus_i(0.0, -1.0);
  SparseOperator out = sparse_kron(id, h) - sparse_kron(h.transpose(), id);
  out *= minus_i;
  out.prune(Complex(0.0, 0.0));
  return out;
}

SparseOperator dissipator_super(const Matrix& l) {
  if (l.rows() != l.cols()) throw Error(ErrorCode::DimensionMismatch, "collapse operator must be square");
  const Matrix id = Matrix::Identity(l.rows(), l.cols());
  const Matrix ldl = l.adjoint() * l;
  SparseOperator out = sparse_kron(l.conjugate(), l);
  out -= 0.5 * sparse_kron(id, ldl);
  out -= 0.5 * sparse_kron(ldl.transpose(), id);
  out.prune(Complex(0.0, 0.0));
  return out;
}

Liouvillian::Liouvillian(SparseOperator l0, SparseOperator l_delta, int dim)
    : l0_(std::move(l0)), l_delta_(std::move(l_delta)), dim_(dim) {
  l0_.makeCompressed();
  l_delta_.makeCompressed();
  delta_is_diagonal_ = true;
  l_delta_diagonal_ = Vector::Zero(l_delta_.rows());
  for (int k = 0; k < l_delta_.outerSize(); ++k)
    for (SparseOperator::InnerIterator it(l_delta_, k); it; ++it) {
      if (it.row() != it.col()) delta_is_diagonal_ = false;
      else l_delta_diagonal_(it.row()) = it.value();
    }
}

void Liouvillian::apply(double delta, const Vector& x, Vector& out) const {
  out.noalias() = l0_ * x;
  if (delta == 0.0) return;
  if (delta_is_diagonal_)
    out += delta * l_delta_diagonal_.cwiseProduct(x);
  else
    out += delta * (l_delta_ * x);
}

SparseOperator Liouvillian::at(double delta) const {
  SparseOperator out = l0_ + delta * l_delta_;
  return out;
}

Liouvillian assemble_generic(const Matrix& h0, const Matrix& h_delta, std::span<const CollapseTerm> collapse) {
  if (h0.rows() != h0.cols() || h_delta.rows() != h0.rows() || h_delta.cols() != h0.cols())
    throw Error(ErrorCode::DimensionMismatch, "H0 and Hdelta must be square and of equal size");
  SparseOperator l0 = hamiltonian_super(h0);
  for (const auto& term : collapse) {
    if (term.rate < 0.0) throw Error(ErrorCode::InvalidNoise, "negative collapse rate");
    if (term.rate == 0.0) continue;
    if (term.op.rows() != h0.rows())
      throw Error(ErrorCode::DimensionMismatch, "collapse operator size differs from H0");
    l0 += term.rate * dissipator_super(term.op);
  }
  l0.prune(Complex(0.0, 0.0));
  return Liouvillian(std::move(l0), hamiltonian_super(h_delta), static_cast<int>(h0.rows()));
}

Liouvillian assemble(const Operators& ops, double g, const NoiseParams& noise) {
  noise.validate();
  const Matrix h0 = g * (ops.a * ops.sigma_plus + ops.a_dag * ops.sigma_minus);
  const Matrix h_delta = 0.5 * ops.sigma_z;
  const std::vector<CollapseTerm> collapse{
      {noise.gamma1, ops.sigma_minus},
      {0.5 * noise.gamma_phi, ops.sigma_z},
      {noise.kappa * (noise.nth + 1.0), ops.a},
      {noise.kappa * noise.nth, ops.a_dag},
  };
  return assemble_generic(h0, h_delta, collapse);
}

Liouvillian assemble_classical(double omega, double drive_phase, const NoiseParams& noise) {
  noise.validate();
  const Matrix h0 = 0.5 * omega * (std::cos(drive_phase) * pauli_x() + std::sin(drive_phase) * pauli_y());
  const Matrix h_delta = 0.5 * pauli_z();
  const std::vector<CollapseTerm> collapse{
      {noise.gamma1, Matrix(qubit_lower())},
      {0.5 * noise.gamma_phi, Matrix(pauli_z())},
  };
  return assemble_generic(h0, h_delta, collapse);
}

}  // namespace glzi
