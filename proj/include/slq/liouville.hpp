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

#include <utility>
#include <vector>

#include "slq/core.hpp"
#include "slq/matrix_exponential.hpp"

namespace slq {

// Density matrices are vectorized row-major project-wide: element
// rho(alpha, beta) sits at index alpha * dim + beta.
ComplexVector vec(const ComplexMatrix& rho);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim);

/// Generator of the averaged dynamics, d vec(rho)/dt = L vec(rho).
struct Superoperator {
  Eigen::Index dim = 0;  // Hilbert-space dimension
  ComplexMatrix mat;     // dim^2 x dim^2, units 1/time

  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

/// exp(L tau) for one constant segment, or a composition of segments.
struct Propagator {
  Eigen::Index dim = 0;
  ComplexMatrix mat;
  double duration = 0.0;

  static Propagator identity(Eigen::Index dim);

  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

/// later * earlier: apply `earlier` first.
Propagator compose(const Propagator& later, const Propagator& earlier);

Propagator make_propagator(const Superoperator& l, double duration);

/// Assembles, term by term,
///   d rho_ab/dt = -i sum_j H_aj rho_jb + i sum_j rho_aj H_jb
///                 - 1/2 sum_kl R_{lk;kb} rho_al - 1/2 sum_kl R_{lk;ka} rho_lb
///                 + sum_kl R_{bl;ka} rho_kl
Superoperator build_superoperator(const Hamiltonian& h0, const CorrelationTensor& r);

/// Independent assembly of the same generator from the channels directly,
///   -i[H, rho] + sum_m gamma_m (A rho A - 1/2 {A^2, rho}).
Superoperator lindblad_superoperator(const Hamiltonian& h0,
                                     const std::vector<FluctuationChannel>& channels);

/// Piecewise-constant control fields of the two-qubit model, held for
/// `duration`.
struct ControlSegment {
  double eps_a = 0.0;
  double eps_b = 0.0;
  double j_a = 0.0;
  double j_b = 0.0;
  double g = 0.0;
  double duration = 0.0;

  void validate() const;
};

/// H0 in the standard basis {|00>,|01>,|10>,|11>}:
///   eps_a sz(a) + eps_b sz(b) + J_a sx(a) + J_b sx(b) + g (|01><10| + |10><01|)
Hamiltonian segment_hamiltonian(const ControlSegment& seg);

/// Noise sources that stay on for every segment of a schedule.
struct NoiseModelSpec {
  std::vector<FluctuationChannel> channels;
};

DensityMatrix propagate_fixed(const Superoperator& l, const DensityMatrix& rho0, double t);

struct TimedState {
  double time;
  DensityMatrix rho;
};

/// Advances rho0 through `segments` with exact per-segment exponentials.
/// Emits rho0 at t = 0, then `samples_per_segment` equally spaced states
/// inside each segment, the last one at the segment end.
std::vector<TimedState> propagate_schedule(const std::vector<ControlSegment>& segments,
                                           const NoiseModelSpec& noise,
                                           const DensityMatrix& rho0,
                                           int samples_per_segment);

std::vector<Propagator> segment_propagators(const std::vector<ControlSegment>& segments,
                                            const NoiseModelSpec& noise);

/// Product of the segment propagators, last segment leftmost.
Propagator schedule_propagator(const std::vector<ControlSegment>& segments,
                               const NoiseModelSpec& noise);

/// Validates an arbitrary matrix as the output of a propagation step.
DensityMatrix validated_state(ComplexMatrix rho, double tol = kDensityTol);

/// Choi matrix sum_ij |i><j| (x) P(|i><j|) of a propagator, dim^2 x dim^2.
ComplexMatrix choi_matrix(const Propagator& p);

/// Smallest eigenvalue of the Choi matrix; >= 0 (to rounding) for a
/// completely positive map. Diagnostic only.
double choi_min_eigenvalue(const Propagator& p);

}  // namespace slq
