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

#include <random>

#include "slq/core.hpp"

namespace slq::test {

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

inline ComplexVector random_pure(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> n;
  ComplexVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(n(rng), n(rng));
  return v.normalized();
}

/// Random full-rank state G G^dagger / Tr.
inline ComplexMatrix random_density(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> n;
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace();
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> n;
  ComplexMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  return 0.5 * (g + g.adjoint());
}

inline ComplexMatrix random_real_symmetric(std::mt19937_64& rng, Eigen::Index d) {
  std::normal_distribution<double> n;
  Eigen::MatrixXd g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = n(rng);
  return (0.5 * (g + g.transpose())).cast<Complex>();
}

}  // namespace slq::test
