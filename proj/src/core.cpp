// Copyright 2026 The SLQ Authors
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

#include "slq/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace slq {

namespace {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) + " must be a non-empty square matrix");
  }
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + " has non-finite entries");
  }
}

}  // namespace

QubitRegister::QubitRegister(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 12) {
    throw std::invalid_argument("qubit count must be in [1, 12]");
  }
  dim_ = Eigen::Index{1} << n_qubits;
}

ComplexMatrix pauli(Pauli kind) {
  ComplexMatrix m(2, 2);
  switch (kind) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

ComplexMatrix embed(const ComplexMatrix& op, int qubit_index,
                    const QubitRegister& reg) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed expects a 2x2 single-qubit operator");
  }
  if (qubit_index < 0 || qubit_index >= reg.n_qubits()) {
    throw std::out_of_range("qubit index " + std::to_string(qubit_index) +
                            " out of range for " +
                            std::to_string(reg.n_qubits()) + " qubits");
  }
  // Qubit q owns bit (n - 1 - q) of the basis index.
  const int shift = reg.n_qubits() - 1 - qubit_index;
  const Eigen::Index dim = reg.dim();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index row = 0; row < dim; ++row) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      const Eigen::Index rest_mask = ~(Eigen::Index{1} << shift);
      if ((row & rest_mask) != (col & rest_mask)) continue;
      out(row, col) = op((row >> shift) & 1, (col >> shift) & 1);
    }
  }
  return out;
}

ComplexMatrix bell_transform() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix u(4, 4);
  // clang-format off
  u << s,  s,  0,  0,
       0,  0,  s,  s,
       0,  0,  s, -s,
       s, -s,  0,  0;
  // clang-format on
  return u;
}

ComplexMatrix change_basis(const ComplexMatrix& m, const ComplexMatrix& u) {
  return u.adjoint() * m * u;
}

DensityDiagnostics check_density(const ComplexMatrix& rho) {
  DensityDiagnostics d;
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    d.hermiticity_defect = std::numeric_limits<double>::infinity();
    d.trace_defect = std::numeric_limits<double>::infinity();
    d.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return d;
  }
  d.hermiticity_defect = max_abs(rho - rho.adjoint());
  d.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, double tol)
    : mat_(std::move(mat)), tol_(tol) {
  require_square(mat_, "density matrix");
  require_finite(mat_, "density matrix");
  const DensityDiagnostics d = check_density(mat_);
  if (d.hermiticity_defect > tol || d.trace_defect > tol ||
      d.min_eigenvalue < -tol) {
    std::ostringstream msg;
    msg << "invalid density matrix: hermiticity defect "
        << d.hermiticity_defect << ", trace defect " << d.trace_defect
        << ", min eigenvalue " << d.min_eigenvalue << " (tol " << tol << ")";
    throw NumericalValidationError(msg.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("zero state vector");
  const ComplexVector v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return mat_.cwiseAbs2().sum();
}

double DensityMatrix::overlap(const ComplexVector& psi) const {
  return (psi.adjoint() * mat_ * psi)(0, 0).real();
}

Hamiltonian::Hamiltonian(ComplexMatrix mat, double tol) : mat_(std::move(mat)) {
  require_square(mat_, "Hamiltonian");
  require_finite(mat_, "Hamiltonian");
  if (max_abs(mat_ - mat_.adjoint()) > tol) {
    throw std::invalid_argument("Hamiltonian is not Hermitian");
  }
}

FluctuationChannel::FluctuationChannel(ComplexMatrix op, double strength,
                                       std::string bath_label)
    : op_(std::move(op)), strength_(strength), bath_label_(std::move(bath_label)) {
  require_square(op_, "channel operator");
  require_finite(op_, "channel operator");
  if (!std::isfinite(strength) || strength < 0.0) {
    throw std::invalid_argument("negative noise strength");
  }
  if (op_.imag().cwiseAbs().maxCoeff() > 0.0) {
    throw std::invalid_argument("channel operator must be real");
  }
  if ((op_.real() - op_.real().transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("channel operator must be symmetric");
  }
}

FluctuationChannel FluctuationChannel::in_basis(const ComplexMatrix& u) const {
  ComplexMatrix rotated = change_basis(op_, u);
  // Orthogonal changes of basis keep the operator real; drop rounding noise.
  if (rotated.imag().cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("basis change does not keep the channel real");
  }
  rotated = rotated.real().cast<Complex>();
  const Eigen::MatrixXd re = rotated.real();
  rotated = (0.5 * (re + re.transpose())).cast<Complex>();
  return FluctuationChannel(std::move(rotated), strength_, bath_label_);
}

CorrelationTensor::Index CorrelationTensor::canonical(int i, int j, int k, int l) {
  Index first{std::min(i, j), std::max(i, j), std::min(k, l), std::max(k, l)};
  Index second{first[2], first[3], first[0], first[1]};
  return std::min(first, second);
}

double CorrelationTensor::operator()(int i, int j, int k, int l) const {
  for (int idx : {i, j, k, l}) {
    if (idx < 0 || idx >= dim_) throw std::out_of_range("tensor index out of range");
  }
  const auto it = entries_.find(canonical(i, j, k, l));
  return it == entries_.end() ? 0.0 : it->second;
}

void CorrelationTensor::add(int i, int j, int k, int l, double value) {
  for (int idx : {i, j, k, l}) {
    if (idx < 0 || idx >= dim_) throw std::out_of_range("tensor index out of range");
  }
  const Index key = canonical(i, j, k, l);
  const double total = entries_[key] + value;
  if (total == 0.0) {
    entries_.erase(key);
  } else {
    entries_[key] = total;
  }
}

Eigen::MatrixXd CorrelationTensor::dense() const {
  const Eigen::Index n = dim_;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n * n, n * n);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) out(i * n + j, k * n + l) = (*this)(i, j, k, l);
  return out;
}

CorrelationTensor build_correlation_tensor(
    const std::vector<FluctuationChannel>& channels, int dim) {
  for (const auto& ch : channels) {
    if (ch.dim() != dim) {
      throw std::invalid_argument("channel dimension " + std::to_string(ch.dim()) +
                                  " does not match " + std::to_string(dim));
    }
  }
  CorrelationTensor r(dim);
  // Walk canonical representatives only: i <= j, k <= l, (i,j) <= (k,l).
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      for (int k = i; k < dim; ++k) {
        for (int l = (k == i ? j : k); l < dim; ++l) {
          double v = 0.0;
          for (const auto& ch : channels) {
            const auto& a = ch.op();
            v += ch.strength() * a(i, j).real() * a(k, l).real();
          }
          if (v != 0.0) r.add(i, j, k, l, v);
        }
      }
    }
  }
  return r;
}

}  // namespace slq
