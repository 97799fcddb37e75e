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

#include <cstdint>
#include <optional>
#include <vector>

#include "slq/core.hpp"

namespace slq {

/// Discretization of the white-noise fluctuations for trajectory sampling.
struct TrajectoryConfig {
  double dt = 0.01;
  double t_final = 1.0;
  int n_trajectories = 10000;
  std::uint64_t master_seed = 0;
  /// Record a state every `record_every` steps (plus t = 0).
  int record_every = 1;
  /// Worker threads for monte_carlo_average; results do not depend on it.
  int threads = 1;

  int n_steps() const;
};

/// Throws std::invalid_argument unless dt * ||H0||_2 <= 0.05,
/// dt * gamma_total <= 0.05, t_final is a whole number of steps, and the
/// counts are positive. gamma_total = sum_m gamma_m ||A_m||_2^2.
void validate_trajectory_config(const TrajectoryConfig& cfg, const Hamiltonian& h0,
                                const std::vector<FluctuationChannel>& channels);

/// Largest dt allowed by the constraints above, rounded down so that
/// t_final / dt is an integer.
double default_dt(double t_final, const Hamiltonian& h0,
                  const std::vector<FluctuationChannel>& channels);

struct TrajectoryPoint {
  double time;
  ComplexMatrix rho;
};

/// One realization of H(t) = H0 + sum_m sqrt(gamma_m / dt) z_m A_m with
/// z_m ~ N(0,1) drawn afresh each step and held constant inside it; the
/// state is advanced by the exact unitary exp(-i H_k dt). The random stream
/// depends only on (master_seed, trajectory_index).
std::vector<TrajectoryPoint> sample_trajectory(const Hamiltonian& h0,
                                               const std::vector<FluctuationChannel>& channels,
                                               const DensityMatrix& rho0,
                                               const TrajectoryConfig& cfg,
                                               std::uint64_t trajectory_index);

struct MonteCarloResult {
  std::vector<double> times;
  std::vector<ComplexMatrix> mean;
  /// Standard error of the real and imaginary parts of each entry.
  std::vector<Eigen::MatrixXd> stderr_re;
  std::vector<Eigen::MatrixXd> stderr_im;
};

/// Element-wise mean and standard error over cfg.n_trajectories
/// trajectories. Entries are reported in the basis given by the columns of
/// `basis` (rho -> U^dagger rho U); the standard basis when omitted. The
/// reduction order is fixed, so the result is bit-identical for any thread
/// count.
MonteCarloResult monte_carlo_average(const Hamiltonian& h0,
                                     const std::vector<FluctuationChannel>& channels,
                                     const DensityMatrix& rho0, const TrajectoryConfig& cfg,
                                     const std::optional<ComplexMatrix>& basis = std::nullopt);

}  // namespace slq
