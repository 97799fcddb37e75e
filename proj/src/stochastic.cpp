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

#include "slq/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace slq {

namespace {

constexpr double kStepBound = 0.05;
constexpr int kChunk = 256;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double spectral_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double gamma_total(const std::vector<FluctuationChannel>& channels) {
  double total = 0.0;
  for (const auto& ch : channels) {
    const double n = spectral_norm(ch.op());
    total += ch.strength() * n * n;
  }
  return total;
}

// Sums of (x - ref) and (x - ref)^2 for the real and imaginary part of
// every recorded entry.
struct Moments {
  std::vector<Eigen::MatrixXd> s_re, s2_re, s_im, s2_im;

  void resize(std::size_t records, Eigen::Index dim) {
    const Eigen::MatrixXd z = Eigen::MatrixXd::Zero(dim, dim);
    s_re.assign(records, z);
    s2_re.assign(records, z);
    s_im.assign(records, z);
    s2_im.assign(records, z);
  }

  void add(const Moments& other) {
    for (std::size_t r = 0; r < s_re.size(); ++r) {
      s_re[r] += other.s_re[r];
      s2_re[r] += other.s2_re[r];
      s_im[r] += other.s_im[r];
      s2_im[r] += other.s2_im[r];
    }
  }
};

}  // namespace

int TrajectoryConfig::n_steps() const {
  return static_cast<int>(std::llround(t_final / dt));
}

void validate_trajectory_config(const TrajectoryConfig& cfg, const Hamiltonian& h0,
                                const std::vector<FluctuationChannel>& channels) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw std::invalid_argument("dt must be positive");
  if (!(cfg.t_final > 0.0) || !std::isfinite(cfg.t_final)) {
    throw std::invalid_argument("t_final must be positive");
  }
  if (cfg.n_trajectories < 1) throw std::invalid_argument("n_trajectories must be positive");
  if (cfg.record_every < 1) throw std::invalid_argument("record_every must be positive");
  const double steps = cfg.t_final / cfg.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    throw std::invalid_argument("t_final must be a whole number of dt steps");
  }
  const double slack = 1.0 + 1e-12;
  if (cfg.dt * spectral_norm(h0.matrix()) > kStepBound * slack) {
    throw std::invalid_argument("dt * ||H0|| exceeds 0.05");
  }
  if (cfg.dt * gamma_total(channels) > kStepBound * slack) {
    throw std::invalid_argument("dt * gamma_total exceeds 0.05");
  }
  for (const auto& ch : channels) {
    if (ch.dim() != h0.dim()) throw std::invalid_argument("channel dimension mismatch");
  }
}

double default_dt(double t_final, const Hamiltonian& h0,
                  const std::vector<FluctuationChannel>& channels) {
  const double scale = std::max(spectral_norm(h0.matrix()), gamma_total(channels));
  const double bound = scale > 0.0 ? kStepBound / scale : t_final;
  const double steps = std::max(1.0, std::ceil(t_final / bound - 1e-12));
  return t_final / steps;
}

std::vector<TrajectoryPoint> sample_trajectory(const Hamiltonian& h0,
                                               const std::vector<FluctuationChannel>& channels,
                                               const DensityMatrix& rho0,
                                               const TrajectoryConfig& cfg,
                                               std::uint64_t trajectory_index) {
  validate_trajectory_config(cfg, h0, channels);
  if (rho0.dim() != h0.dim()) throw std::invalid_argument("initial state dimension mismatch");

  std::mt19937_64 rng(splitmix64(cfg.master_seed ^ splitmix64(trajectory_index)));
  std::normal_distribution<double> normal(0.0, 1.0);

  const int steps = cfg.n_steps();
  const Eigen::Index d = h0.dim();
  std::vector<double> amplitude;
  amplitude.reserve(channels.size());
  for (const auto& ch : channels) amplitude.push_back(std::sqrt(ch.strength() / cfg.dt));

  std::vector<TrajectoryPoint> out;
  out.reserve(static_cast<std::size_t>(steps / cfg.record_every) + 1);
  ComplexMatrix rho = rho0.matrix();
  out.push_back({0.0, rho});

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(d);
  ComplexMatrix hk(d, d);
  ComplexMatrix u(d, d);
  for (int k = 1; k <= steps; ++k) {
    hk = h0.matrix();
    for (std::size_t m = 0; m < channels.size(); ++m) {
      hk += (amplitude[m] * normal(rng)) * channels[m].op();
    }
    es.compute(hk);
    const Eigen::VectorXd& w = es.eigenvalues();
    const ComplexMatrix& v = es.eigenvectors();
    ComplexVector phase(d);
    for (Eigen::Index i = 0; i < d; ++i) phase(i) = std::exp(-kI * (w(i) * cfg.dt));
    u.noalias() = v * phase.asDiagonal() * v.adjoint();
    rho = u * rho * u.adjoint();
    if (k % cfg.record_every == 0) out.push_back({k * cfg.dt, rho});
  }
  return out;
}

MonteCarloResult monte_carlo_average(const Hamiltonian& h0,
                                     const std::vector<FluctuationChannel>& channels,
                                     const DensityMatrix& rho0, const TrajectoryConfig& cfg,
                                     const std::optional<ComplexMatrix>& basis) {
  validate_trajectory_config(cfg, h0, channels);
  if (cfg.n_trajectories < 100) throw std::invalid_argument("monte_carlo_average needs >= 100 trajectories");
  const Eigen::Index d = h0.dim();
  const ComplexMatrix u = basis ? *basis : ComplexMatrix::Identity(d, d);
  if (u.rows() != d || u.cols() != d) throw std::invalid_argument("basis dimension mismatch");

  auto in_basis = [&](const ComplexMatrix& rho) -> ComplexMatrix {
    return basis ? ComplexMatrix(u.adjoint() * rho * u) : rho;
  };

  // Trajectory 0 is the shift reference, so identical trajectories give an
  // exactly zero spread.
  const auto reference_traj = sample_trajectory(h0, channels, rho0, cfg, 0);
  const std::size_t records = reference_traj.size();
  std::vector<ComplexMatrix> reference(records);
  MonteCarloResult result;
  for (std::size_t r = 0; r < records; ++r) {
    reference[r] = in_basis(reference_traj[r].rho);
    result.times.push_back(reference_traj[r].time);
  }

  const int n = cfg.n_trajectories;
  const int n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<Moments> chunk_moments(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](int c) {
    Moments& mom = chunk_moments[static_cast<std::size_t>(c)];
    mom.resize(records, d);
    const int begin = c * kChunk;
    const int end = std::min(n, begin + kChunk);
    for (int t = begin; t < end; ++t) {
      const auto traj = t == 0 ? reference_traj
                               : sample_trajectory(h0, channels, rho0, cfg,
                                                   static_cast<std::uint64_t>(t));
      for (std::size_t r = 0; r < records; ++r) {
        const ComplexMatrix diff = in_basis(traj[r].rho) - reference[r];
        const Eigen::MatrixXd re = diff.real();
        const Eigen::MatrixXd im = diff.imag();
        mom.s_re[r] += re;
        mom.s2_re[r] += re.cwiseAbs2();
        mom.s_im[r] += im;
        mom.s2_im[r] += im.cwiseAbs2();
      }
    }
  };

  const int threads = std::clamp(cfg.threads, 1, std::max(1, n_chunks));
  if (threads == 1) {
    for (int c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (int c = w; c < n_chunks; c += threads) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  Moments total;
  total.resize(records, d);
  for (const auto& m : chunk_moments) total.add(m);

  const double nn = static_cast<double>(n);
  auto spread = [&](const Eigen::MatrixXd& s, const Eigen::MatrixXd& s2) {
    if (n < 2) return Eigen::MatrixXd(Eigen::MatrixXd::Zero(d, d));
    Eigen::MatrixXd var = (s2 - s.cwiseAbs2() / nn) / (nn - 1.0);
    return Eigen::MatrixXd(var.cwiseMax(0.0).cwiseSqrt() / std::sqrt(nn));
  };
  for (std::size_t r = 0; r < records; ++r) {
    ComplexMatrix mean = reference[r];
    mean.real() += total.s_re[r] / nn;
    mean.imag() += total.s_im[r] / nn;
    result.mean.push_back(std::move(mean));
    result.stderr_re.push_back(spread(total.s_re[r], total.s2_re[r]));
    result.stderr_im.push_back(spread(total.s_im[r], total.s2_im[r]));
  }
  return result;
}

}  // namespace slq
