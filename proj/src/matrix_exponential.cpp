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

#include "slq/matrix_exponential.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace slq {

namespace {

// Theta_m for double precision.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

struct PadeParts {
  ComplexMatrix u;  // odd part
  ComplexMatrix v;  // even part
};

PadeParts pade_low(const ComplexMatrix& a, int degree) {
  static constexpr std::array<double, 4> b3{120.0, 60.0, 12.0, 1.0};
  static constexpr std::array<double, 6> b5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  static constexpr std::array<double, 8> b7{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                            25200.0,    1512.0,    56.0,      1.0};
  static constexpr std::array<double, 10> b9{17643225600.0, 8821612800.0, 2075673600.0,
                                             302702400.0,   30270240.0,   2162160.0,
                                             110880.0,      3960.0,       90.0,
                                             1.0};
  const double* b = nullptr;
  switch (degree) {
    case 3: b = b3.data(); break;
    case 5: b = b5.data(); break;
    case 7: b = b7.data(); break;
    default: b = b9.data(); break;
  }
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  ComplexMatrix power = ident;
  ComplexMatrix u_inner = b[1] * ident;
  ComplexMatrix v = b[0] * ident;
  for (int k = 2; k <= degree; k += 2) {
    power = power * a2;
    v += b[k] * power;
    u_inner += b[k + 1] * power;
  }
  return {a * u_inner, v};
}

PadeParts pade13(const ComplexMatrix& a) {
  static constexpr std::array<double, 14> b{
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const Eigen::Index n = a.rows();
  const ComplexMatrix ident = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix u_hi = b[13] * a6 + b[11] * a4 + b[9] * a2;
  const ComplexMatrix u = a * (a6 * u_hi + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  const ComplexMatrix v_hi = b[12] * a6 + b[10] * a4 + b[8] * a2;
  const ComplexMatrix v = a6 * v_hi + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
  return {u, v};
}

double one_norm(const ComplexMatrix& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

ComplexMatrix matrix_exponential(const ComplexMatrix& m, double t) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exponential: matrix must be square");
  if (!std::isfinite(t)) throw std::invalid_argument("matrix_exponential: non-finite time");
  if (!m.allFinite()) throw std::invalid_argument("matrix_exponential: non-finite entries");

  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  ComplexMatrix a = m * t;
  const double norm = one_norm(a);
  if (norm == 0.0) return ComplexMatrix::Identity(n, n);

  PadeParts parts;
  int squarings = 0;
  if (norm <= kTheta3) {
    parts = pade_low(a, 3);
  } else if (norm <= kTheta5) {
    parts = pade_low(a, 5);
  } else if (norm <= kTheta7) {
    parts = pade_low(a, 7);
  } else if (norm <= kTheta9) {
    parts = pade_low(a, 9);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / kTheta13))));
    a /= std::ldexp(1.0, squarings);
    parts = pade13(a);
  }
  ComplexMatrix result = (parts.v - parts.u).partialPivLu().solve(parts.v + parts.u);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace slq
