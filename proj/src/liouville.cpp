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

#include "slq/liouville.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slq {

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_finite_duration(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("propagation time must be finite and non-negative");
  }
}

}  // namespace

ComplexVector vec(const ComplexMatrix& rho) {
  const Eigen::Index n = rho.rows();
  ComplexVector v(n * rho.cols());
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < rho.cols(); ++b) v(a * rho.cols() + b) = rho(a, b);
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim) {
  if (v.size() != dim * dim) throw std::invalid_argument("unvec: size mismatch");
  ComplexMatrix rho(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) rho(a, b) = v(a * dim + b);
  return rho;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
  return unvec(mat * vec(rho), dim);
}

Propagator Propagator::identity(Eigen::Index dim) {
  return {dim, ComplexMatrix::Identity(dim * dim, dim * dim), 0.0};
}

ComplexMatrix Propagator::apply(const ComplexMatrix& rho) const {
  return unvec(mat * vec(rho), dim);
}

Propagator compose(const Propagator& later, const Propagator& earlier) {
  if (later.dim != earlier.dim) throw std::invalid_argument("compose: dimension mismatch");
  return {later.dim, later.mat * earlier.mat, later.duration + earlier.duration};
}

Propagator make_propagator(const Superoperator& l, double duration) {
  require_finite_duration(duration);
  return {l.dim, matrix_exponential(l.mat, duration), duration};
}

Superoperator build_superoperator(const Hamiltonian& h0, const CorrelationTensor& r) {
  const Eigen::Index d = h0.dim();
  if (r.dim() != d) {
    throw std::invalid_argument("Hamiltonian dimension " + std::to_string(d) +
                                " does not match correlation tensor dimension " +
                                std::to_string(r.dim()));
  }
  const ComplexMatrix& h = h0.matrix();
  const Eigen::MatrixXd rd = r.dense();
  auto R = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k, Eigen::Index l) {
    return rd(i * d + j, k * d + l);
  };

  // contracted(l, b) = sum_k R_{lk;kb}
  Eigen::MatrixXd contracted = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index l = 0; l < d; ++l)
    for (Eigen::Index b = 0; b < d; ++b)
      for (Eigen::Index k = 0; k < d; ++k) contracted(l, b) += R(l, k, k, b);

  Superoperator out{d, ComplexMatrix::Zero(d * d, d * d)};
  ComplexMatrix& m = out.mat;
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      const Eigen::Index row = a * d + b;
      for (Eigen::Index j = 0; j < d; ++j) {
        m(row, j * d + b) += -kI * h(a, j);
        m(row, a * d + j) += kI * h(j, b);
      }
      for (Eigen::Index l = 0; l < d; ++l) {
        m(row, a * d + l) += -0.5 * contracted(l, b);
        m(row, l * d + b) += -0.5 * contracted(l, a);
      }
      for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index l = 0; l < d; ++l) m(row, k * d + l) += R(b, l, k, a);
    }
  }
  return out;
}

Superoperator lindblad_superoperator(const Hamiltonian& h0,
                                     const std::vector<FluctuationChannel>& channels) {
  const Eigen::Index d = h0.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix& h = h0.matrix();
  Superoperator out{d, -kI * (kron(h, id) - kron(id, h.transpose()))};
  for (const auto& ch : channels) {
    if (ch.dim() != d) throw std::invalid_argument("channel dimension mismatch");
    const ComplexMatrix& a = ch.op();
    const ComplexMatrix a2 = a * a;
    out.mat += ch.strength() *
               (kron(a, a.transpose()) - 0.5 * kron(a2, id) - 0.5 * kron(id, a2.transpose()));
  }
  return out;
}

void ControlSegment::validate() const {
  for (double v : {eps_a, eps_b, j_a, j_b, g, duration}) {
    if (!std::isfinite(v)) throw std::invalid_argument("control segment has non-finite field");
  }
  if (!(duration > 0.0)) throw std::invalid_argument("control segment duration must be positive");
}

Hamiltonian segment_hamiltonian(const ControlSegment& seg) {
  const double ea = seg.eps_a, eb = seg.eps_b, ja = seg.j_a, jb = seg.j_b, g = seg.g;
  ComplexMatrix h(4, 4);
  // clang-format off
  h << ea + eb, jb,      ja,      0,
       jb,      ea - eb, g,       ja,
       ja,      g,       eb - ea, jb,
       0,       ja,      jb,      -ea - eb;
  // clang-format on
  return Hamiltonian(std::move(h));
}

DensityMatrix validated_state(ComplexMatrix rho, double tol) {
  // Enforce exact Hermiticity only after the check has passed.
  const DensityDiagnostics d = check_density(rho);
  if (!rho.allFinite() || d.hermiticity_defect > tol || d.trace_defect > tol ||
      d.min_eigenvalue < -tol) {
    std::ostringstream msg;
    msg << "propagated state failed validation: hermiticity defect "
        << d.hermiticity_defect << ", trace defect " << d.trace_defect
        << ", min eigenvalue " << d.min_eigenvalue;
    throw NumericalValidationError(msg.str());
  }
  return DensityMatrix(0.5 * (rho + rho.adjoint()), tol);
}

DensityMatrix propagate_fixed(const Superoperator& l, const DensityMatrix& rho0, double t) {
  require_finite_duration(t);
  if (rho0.dim() != l.dim) throw std::invalid_argument("propagate_fixed: dimension mismatch");
  if (t == 0.0) return rho0;
  const ComplexMatrix step = matrix_exponential(l.mat, t);
  return validated_state(unvec(step * vec(rho0.matrix()), l.dim), rho0.tolerance());
}

std::vector<Propagator> segment_propagators(const std::vector<ControlSegment>& segments,
                                            const NoiseModelSpec& noise) {
  const CorrelationTensor r = build_correlation_tensor(noise.channels, 4);
  std::vector<Propagator> out;
  out.reserve(segments.size());
  for (const auto& seg : segments) {
    seg.validate();
    out.push_back(make_propagator(build_superoperator(segment_hamiltonian(seg), r), seg.duration));
  }
  return out;
}

Propagator schedule_propagator(const std::vector<ControlSegment>& segments,
                               const NoiseModelSpec& noise) {
  Propagator total = Propagator::identity(4);
  for (const auto& p : segment_propagators(segments, noise)) total = compose(p, total);
  return total;
}

std::vector<TimedState> propagate_schedule(const std::vector<ControlSegment>& segments,
                                           const NoiseModelSpec& noise,
                                           const DensityMatrix& rho0,
                                           int samples_per_segment) {
  if (segments.empty()) throw std::invalid_argument("propagate_schedule: empty schedule");
  if (samples_per_segment < 1) {
    throw std::invalid_argument("propagate_schedule: samples_per_segment must be >= 1");
  }
  if (rho0.dim() != 4) throw std::invalid_argument("propagate_schedule: expects a two-qubit state");

  const CorrelationTensor r = build_correlation_tensor(noise.channels, 4);
  std::vector<TimedState> out;
  out.reserve(1 + segments.size() * static_cast<std::size_t>(samples_per_segment));
  out.push_back({0.0, rho0});

  double t0 = 0.0;
  ComplexVector start = vec(rho0.matrix());
  for (const auto& seg : segments) {
    seg.validate();
    const Superoperator l = build_superoperator(segment_hamiltonian(seg), r);
    ComplexVector end;
    for (int s = 1; s <= samples_per_segment; ++s) {
      const double tau = seg.duration * s / samples_per_segment;
      const ComplexVector v = matrix_exponential(l.mat, tau) * start;
      out.push_back({t0 + tau, validated_state(unvec(v, 4), rho0.tolerance())});
      if (s == samples_per_segment) end = v;
    }
    start = end;
    t0 += seg.duration;
  }
  return out;
}

ComplexMatrix choi_matrix(const Propagator& p) {
  const Eigen::Index d = p.dim;
  ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      ComplexMatrix unit = ComplexMatrix::Zero(d, d);
      unit(i, j) = 1.0;
      choi.block(i * d, j * d, d, d) = p.apply(unit);
    }
  }
  return choi;
}

double choi_min_eigenvalue(const Propagator& p) {
  const ComplexMatrix c = choi_matrix(p);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (c + c.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace slq
