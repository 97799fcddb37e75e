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

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace slq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kDensityTol = 1e-9;

/// Raised when a propagated state fails density-matrix validation. This
/// always indicates a defect in generator assembly, never bad user input.
class NumericalValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n qubits spanning a 2^n basis. Basis index bits are read left to right
/// with the most significant bit belonging to qubit a (index 0), so for
/// n = 2 index 2 is |10>.
class QubitRegister {
 public:
  explicit QubitRegister(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return dim_; }

 private:
  int n_qubits_;
  Eigen::Index dim_;
};

enum class Pauli { I, X, Y, Z };

/// Standard 2x2 Pauli matrix, with sigma_z |0> = +|0>.
ComplexMatrix pauli(Pauli kind);

/// I (x) ... (x) op (x) ... (x) I with op acting on `qubit_index`
/// (0 = leftmost = qubit a).
ComplexMatrix embed(const ComplexMatrix& op, int qubit_index,
                    const QubitRegister& reg);

/// Columns are |B1>..|B4> in the standard basis {|00>,|01>,|10>,|11>}:
///   B1 = (|00> + |11>)/sqrt2,  B2 = (|00> - |11>)/sqrt2,
///   B3 = (|01> + |10>)/sqrt2,  B4 = (|01> - |10>)/sqrt2.
ComplexMatrix bell_transform();

/// U^dagger M U. With U = bell_transform() this expresses M in the Bell basis.
ComplexMatrix change_basis(const ComplexMatrix& m, const ComplexMatrix& u);

struct DensityDiagnostics {
  double hermiticity_defect = 0.0;  // max |rho - rho^dagger|
  double trace_defect = 0.0;        // |Tr rho - 1|
  double min_eigenvalue = 0.0;      // of the Hermitian part
};

/// Never throws for square input.
DensityDiagnostics check_density(const ComplexMatrix& rho);

/// Hermitian, unit-trace, positive semidefinite matrix. Construction
/// validates all three within `tol` and throws NumericalValidationError
/// otherwise.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat, double tol = kDensityTol);

  static DensityMatrix pure(const ComplexVector& psi);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  double tolerance() const { return tol_; }

  Complex operator()(Eigen::Index row, Eigen::Index col) const {
    return mat_(row, col);
  }
  double population(Eigen::Index i) const { return mat_(i, i).real(); }
  double purity() const;
  /// <psi| rho |psi>
  double overlap(const ComplexVector& psi) const;

 private:
  ComplexMatrix mat_;
  double tol_;
};

/// Time-independent Hamiltonian H0 (hbar = 1).
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix mat, double tol = kDensityTol);

  const ComplexMatrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// One independent white-noise source h(t) = xi(t) * A with
/// <xi(t) xi(t')> = strength * delta(t - t'). A must be real symmetric.
/// Fluctuations that are driven by the same bath field on several qubits
/// are a single channel whose operator is the sum of the per-qubit terms.
class FluctuationChannel {
 public:
  FluctuationChannel(ComplexMatrix op, double strength,
                     std::string bath_label = {});

  const ComplexMatrix& op() const { return op_; }
  double strength() const { return strength_; }
  const std::string& bath_label() const { return bath_label_; }
  Eigen::Index dim() const { return op_.rows(); }

  /// Same source, operator expressed as U^dagger A U (U real orthogonal).
  FluctuationChannel in_basis(const ComplexMatrix& u) const;

 private:
  ComplexMatrix op_;
  double strength_;
  std::string bath_label_;
};

/// Second moments R_{ij;kl} of the fluctuating matrix elements. Only one
/// representative of each symmetry class
///   R_{ij;kl} = R_{ji;kl} = R_{ij;lk} = R_{ji;lk} = R_{kl;ij}
/// is stored; any ordering looks up the same entry.
class CorrelationTensor {
 public:
  using Index = std::array<int, 4>;

  explicit CorrelationTensor(int dim) : dim_(dim) {}

  int dim() const { return dim_; }

  double operator()(int i, int j, int k, int l) const;

  /// Adds to the class of (i,j,k,l). Zero sums are dropped.
  void add(int i, int j, int k, int l, double value);

  const std::map<Index, double>& entries() const { return entries_; }
  std::size_t irreducible_count() const { return entries_.size(); }

  /// Lexicographically smallest equivalent ordering.
  static Index canonical(int i, int j, int k, int l);

  /// Dense dim^2 x dim^2 view with rows (i*dim + j) and columns (k*dim + l).
  Eigen::MatrixXd dense() const;

 private:
  int dim_;
  std::map<Index, double> entries_;
};

/// R_{ij;kl} = sum_m gamma_m (A_m)_{ij} (A_m)_{kl}. Distinct channels are
/// uncorrelated. An empty list gives the zero tensor of dimension `dim`.
CorrelationTensor build_correlation_tensor(
    const std::vector<FluctuationChannel>& channels, int dim);

}  // namespace slq
