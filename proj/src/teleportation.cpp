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

#include "slq/teleportation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "slq/matrix_exponential.hpp"

namespace slq::teleport {

namespace {

void require_rate(double v, const char* what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw std::invalid_argument(std::string(what) + ": negative noise strength");
  }
}

void require_time(double t) {
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("time must be non-negative");
}

void require_bell_index(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("Bell index must be in 1..4");
}

const QubitRegister& two_qubits() {
  static const QubitRegister reg(2);
  return reg;
}

ComplexMatrix on(Pauli kind, int qubit) { return embed(pauli(kind), qubit, two_qubits()); }

ComplexVector bell_state(int bell_index) {
  return bell_transform().col(bell_index - 1);
}

}  // namespace

void EprModel::validate() const {
  for (double v : {eps_a, eps_b, j_a, j_b}) {
    if (!std::isfinite(v)) throw std::invalid_argument("EPR model field must be finite");
  }
  require_rate(g0a, "gamma0_a");
  require_rate(g0b, "gamma0_b");
  require_rate(g1a, "gamma1_a");
  require_rate(g1b, "gamma1_b");
  require_rate(g0, "gamma0");
  require_rate(g1, "gamma1");
}

EprModel EprModel::independent(double big_gamma0, double big_gamma1) {
  EprModel m;
  m.g0a = m.g0b = 0.5 * big_gamma0;
  m.g1a = m.g1b = 0.5 * big_gamma1;
  return m;
}

EprModel EprModel::collective(double gamma0, double gamma1) {
  EprModel m;
  m.bath = Bath::collective;
  m.g0 = gamma0;
  m.g1 = gamma1;
  return m;
}

std::vector<FluctuationChannel> epr_channels(const EprModel& model, Basis basis) {
  model.validate();
  std::vector<FluctuationChannel> out;
  if (model.bath == Bath::independent) {
    out.emplace_back(on(Pauli::Z, 0), model.g0a, "a");
    out.emplace_back(on(Pauli::Z, 1), model.g0b, "b");
    out.emplace_back(on(Pauli::X, 0), model.g1a, "a");
    out.emplace_back(on(Pauli::X, 1), model.g1b, "b");
  } else {
    out.emplace_back(on(Pauli::Z, 0) + on(Pauli::Z, 1), model.g0, "common");
    out.emplace_back(on(Pauli::X, 0) + on(Pauli::X, 1), model.g1, "common");
  }
  if (basis == Basis::bell) {
    const ComplexMatrix u = bell_transform();
    for (auto& ch : out) ch = ch.in_basis(u);
  }
  return out;
}

Hamiltonian epr_hamiltonian(const EprModel& model, Basis basis) {
  model.validate();
  ComplexMatrix h = model.eps_a * on(Pauli::Z, 0) + model.eps_b * on(Pauli::Z, 1) +
                    model.j_a * on(Pauli::X, 0) + model.j_b * on(Pauli::X, 1);
  if (basis == Basis::bell) h = change_basis(h, bell_transform());
  return Hamiltonian(std::move(h));
}

EprOperators build_epr_model(const EprModel& model, Basis basis) {
  return {epr_hamiltonian(model, basis),
          build_correlation_tensor(epr_channels(model, basis), 4)};
}

PureQubitState::PureQubitState(Complex c0_, Complex c1_) : c0(c0_), c1(c1_) {
  if (std::abs(std::norm(c0) + std::norm(c1) - 1.0) > 1e-12) {
    throw std::invalid_argument("qubit state is not normalized");
  }
}

ComplexVector PureQubitState::vector() const {
  ComplexVector v(2);
  v << c0, c1;
  return v;
}

BellWeights::BellWeights(std::array<double, 4> p_) : p(p_) {
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < -1e-12) throw std::invalid_argument("Bell weight is negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("Bell weights do not sum to 1");
}

BellWeights bell_populations_closed_form(double big_gamma0, double big_gamma1, double t) {
  require_rate(big_gamma0, "Gamma0");
  require_rate(big_gamma1, "Gamma1");
  require_time(t);
  const double e0 = std::exp(-2.0 * big_gamma0 * t);
  const double e1 = std::exp(-2.0 * big_gamma1 * t);
  const double e01 = std::exp(-2.0 * (big_gamma0 + big_gamma1) * t);
  return BellWeights({0.25 * (1.0 + e0 + e1 + e01), 0.25 * (1.0 - e0 + e1 - e01),
                      0.25 * (1.0 + e0 - e1 - e01), 0.25 * (1.0 - e0 - e1 + e01)});
}

double entanglement_fidelity(double big_gamma0, double big_gamma1, double t) {
  return bell_populations_closed_form(big_gamma0, big_gamma1, t)[0];
}

std::optional<double> critical_time(double big_gamma0, double big_gamma1) {
  require_rate(big_gamma0, "Gamma0");
  require_rate(big_gamma1, "Gamma1");
  const double slowest = std::min(big_gamma0, big_gamma1);
  if (slowest == 0.0) return std::nullopt;
  // F_e is strictly decreasing from 1 towards 1/4.
  double lo = 0.0;
  double hi = 10.0 / slowest;
  while (hi - lo > 1e-10 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (entanglement_fidelity(big_gamma0, big_gamma1, mid) > 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DensityMatrix teleport(const PureQubitState& psi, const BellWeights& weights) {
  static const std::array<Pauli, 4> corrections{Pauli::I, Pauli::Z, Pauli::X, Pauli::Y};
  const ComplexVector v = psi.vector();
  const ComplexMatrix target = v * v.adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(2, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    const ComplexMatrix p = pauli(corrections[i]);
    out += weights[i] * (p * target * p);
  }
  return DensityMatrix(std::move(out));
}

double teleportation_fidelity(const PureQubitState& psi, double big_gamma0,
                              double big_gamma1, double t) {
  require_rate(big_gamma0, "Gamma0");
  require_rate(big_gamma1, "Gamma1");
  require_time(t);
  const Complex c0 = psi.c0, c1 = psi.c1;
  const Complex sym = std::conj(c0) * c1 + c0 * std::conj(c1);
  const Complex anti = std::conj(c0) * c1 - c0 * std::conj(c1);
  const double pop = std::norm(c0) - std::norm(c1);
  const Complex f = 0.5 + 0.5 * sym * sym * std::exp(-2.0 * big_gamma0 * t) +
                    0.5 * pop * pop * std::exp(-2.0 * big_gamma1 * t) -
                    0.5 * anti * anti * std::exp(-2.0 * (big_gamma0 + big_gamma1) * t);
  return f.real();
}

std::vector<DensityMatrix> bell_basis_trace(const EprModel& model, int bell_index,
                                            const std::vector<double>& t_grid) {
  require_bell_index(bell_index);
  const EprOperators ops = build_epr_model(model, Basis::bell);
  const Superoperator l = build_superoperator(ops.h0, ops.r);
  ComplexVector e = ComplexVector::Zero(4);
  e(bell_index - 1) = 1.0;
  const DensityMatrix rho0 = DensityMatrix::pure(e);
  std::vector<DensityMatrix> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back(propagate_fixed(l, rho0, t));
  return out;
}

std::vector<std::pair<double, double>> bell_fidelity_trace(const EprModel& model,
                                                           int bell_index,
                                                           const std::vector<double>& t_grid) {
  const auto states = bell_basis_trace(model, bell_index, t_grid);
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    out.emplace_back(t_grid[i], states[i].population(bell_index - 1));
  }
  return out;
}

BellWeights collective_bath_populations(double gamma0, double gamma1, double t,
                                        int bell_index) {
  require_rate(gamma0, "gamma0");
  require_rate(gamma1, "gamma1");
  require_time(t);
  require_bell_index(bell_index);
  const double k0 = 4.0 * gamma0;
  const double k1 = 4.0 * gamma1;
  ComplexMatrix rates = ComplexMatrix::Zero(4, 4);
  // clang-format off
  rates(0, 0) = -(k0 + k1); rates(0, 1) = k0;  rates(0, 2) = k1;
  rates(1, 0) = k0;         rates(1, 1) = -k0;
  rates(2, 0) = k1;                            rates(2, 2) = -k1;
  // clang-format on
  const ComplexMatrix flow = matrix_exponential(rates, t);
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = flow(i, bell_index - 1).real();
  // Rounding can leave the sum a few ulps off 1.
  const double sum = p[0] + p[1] + p[2] + p[3];
  for (double& x : p) x = std::max(0.0, x / sum);
  return BellWeights(p);
}

double collective_expectation(Pauli kind, int bell_index) {
  require_bell_index(bell_index);
  const ComplexMatrix s = on(kind, 0) + on(kind, 1);
  const ComplexVector phi = bell_state(bell_index);
  return (phi.adjoint() * s * phi)(0, 0).real();
}

}  // namespace slq::teleport
