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
#include <optional>
#include <utility>
#include <vector>

#include "slq/core.hpp"
#include "slq/liouville.hpp"

namespace slq::teleport {

enum class Bath { independent, collective };
enum class Basis { standard, bell };

/// Two uncoupled qubits a, b carrying an EPR pair:
///   H = sum_n (eps_n + d eps_n(t)) sz(n) + (J_n + d J_n(t)) sx(n).
/// Independent baths use the per-qubit strengths g0a..g1b; a collective
/// bath drives both qubits with one field of strength g0 (sz) and g1 (sx).
struct EprModel {
  double eps_a = 0.0, eps_b = 0.0, j_a = 0.0, j_b = 0.0;
  double g0a = 0.0, g0b = 0.0, g1a = 0.0, g1b = 0.0;
  Bath bath = Bath::independent;
  double g0 = 0.0, g1 = 0.0;

  void validate() const;

  /// Same independent-bath rates split evenly over both qubits.
  static EprModel independent(double big_gamma0, double big_gamma1);
  static EprModel collective(double gamma0, double gamma1);
};

/// Fluctuation channels in the requested basis.
std::vector<FluctuationChannel> epr_channels(const EprModel& model, Basis basis);
Hamiltonian epr_hamiltonian(const EprModel& model, Basis basis);

struct EprOperators {
  Hamiltonian h0;
  CorrelationTensor r;
};

EprOperators build_epr_model(const EprModel& model, Basis basis);

struct PureQubitState {
  Complex c0;
  Complex c1;

  PureQubitState(Complex c0, Complex c1);
  ComplexVector vector() const;
};

/// Probabilities of the four Bell states in a mixture.
struct BellWeights {
  std::array<double, 4> p;

  explicit BellWeights(std::array<double, 4> p);
  double operator[](std::size_t i) const { return p[i]; }
};

/// Bell populations at time t for an initial |B1>, eps = J = 0, with
/// Gamma0 = g0a + g0b and Gamma1 = g1a + g1b.
BellWeights bell_populations_closed_form(double big_gamma0, double big_gamma1, double t);

/// Tr(rho0 rho(t)) for the same setting.
double entanglement_fidelity(double big_gamma0, double big_gamma1, double t);

/// Time at which entanglement_fidelity drops to 1/2; nullopt when either
/// rate is zero (the fidelity then never falls below 1/2).
std::optional<double> critical_time(double big_gamma0, double big_gamma1);

/// Bob's qubit after an ideal protocol over a Bell-mixture channel. Bell
/// state i contributes P_i |psi><psi| P_i with P = (I, sz, sx, sy).
DensityMatrix teleport(const PureQubitState& psi, const BellWeights& weights);

/// Closed-form <psi| rho'(t) |psi> for the independent-bath channel.
double teleportation_fidelity(const PureQubitState& psi, double big_gamma0,
                              double big_gamma1, double t);

/// <B_i| rho(t) |B_i> on a time grid for rho(0) = |B_i><B_i|, by
/// superoperator propagation in the Bell basis. `bell_index` is 1-based.
std::vector<std::pair<double, double>> bell_fidelity_trace(const EprModel& model,
                                                           int bell_index,
                                                           const std::vector<double>& t_grid);

/// Bell-basis density matrix at each grid time for rho(0) = |B_i><B_i|.
std::vector<DensityMatrix> bell_basis_trace(const EprModel& model, int bell_index,
                                            const std::vector<double>& t_grid);

/// Collective-bath populations with eps = J = 0, from the four-state rate
/// equations (rates 4 gamma0 for B1<->B2 and 4 gamma1 for B1<->B3; B4 is
/// decoupled).
BellWeights collective_bath_populations(double gamma0, double gamma1, double t,
                                        int bell_index);

/// <phi| S |phi> for the collective operator S = P(a) + P(b).
double collective_expectation(Pauli kind, int bell_index);

}  // namespace slq::teleport
