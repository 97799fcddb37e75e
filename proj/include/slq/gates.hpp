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
#include <string>
#include <vector>

#include "slq/core.hpp"
#include "slq/liouville.hpp"

namespace slq::gates {

enum class Qubit { a, b };

/// Elementary operations realizable by switching on one control field:
///   Zrot(n, alpha) = exp(i alpha/2 sz(n)),  Xrot(n, alpha) = exp(i alpha/2 sx(n)),
///   XYrot(alpha)   = exp(i alpha (|01><10| + |10><01|)).
struct GateOp {
  enum class Kind { Zrot, Xrot, XYrot };
  Kind kind;
  Qubit qubit;  // ignored for XYrot
  double angle;

  static GateOp zrot(Qubit q, double angle) { return {Kind::Zrot, q, angle}; }
  static GateOp xrot(Qubit q, double angle) { return {Kind::Xrot, q, angle}; }
  static GateOp xyrot(double angle) { return {Kind::XYrot, Qubit::a, angle}; }

  /// Ideal unitary of the operation.
  ComplexMatrix unitary() const;
};

/// Common-bath noise: gamma0 on the shared diagonal field, gamma1 on the
/// shared off-diagonal field, gamma2 on the XY coupling.
struct GateNoiseSpec {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;

  void validate() const;
};

/// Magnitudes of the controllable fields.
struct FieldStrengths {
  double eps0 = 1.0;
  double j0 = 1.0;
  double gxy0 = 1.0;

  void validate() const;
};

struct GateMetrics {
  double fidelity;
  double purity;
  double error;  // 1 - fidelity
};

/// Channels: (sz(a) + sz(b), g0), (sx(a) + sx(b), g1), (|01><10| + h.c., g2).
std::vector<FluctuationChannel> gate_channels(const GateNoiseSpec& noise);
NoiseModelSpec gate_noise_model(const GateNoiseSpec& noise);

struct GateModel {
  Hamiltonian h0;
  CorrelationTensor r;
};

GateModel build_gate_model(const ControlSegment& fields, const GateNoiseSpec& noise);

/// Field and duration that realize `op`:
///   Zrot  -> eps_n = -eps0 sign(alpha), tau = |alpha| / (2 eps0)
///   Xrot  -> J_n   = -J0 sign(alpha),   tau = |alpha| / (2 J0)
///   XYrot -> g     = -g0 sign(alpha),   tau = |alpha| / g0
ControlSegment elementary_schedule(const GateOp& op, const FieldStrengths& strengths);

/// The operation sequence whose product is CNOT (first applied first):
/// Zrot(a,-pi/2), Zrot(b,-pi/2), XYrot(pi/2), Xrot(a,-pi/2), XYrot(-pi/2),
/// Xrot(b,-pi), Zrot(b,-pi/2), Xrot(b,pi/2).
std::vector<GateOp> cnot_sequence();

/// Seven segments; the two leading z rotations run simultaneously.
std::vector<ControlSegment> cnot_schedule(const FieldStrengths& strengths);

double schedule_duration(const std::vector<ControlSegment>& segments);

ComplexMatrix ideal_cnot();

/// |phi_i>_a (x) |phi_j>_b with phi in {|0>, |1>, (|0>+|1>)/sqrt2,
/// (|0>+i|1>)/sqrt2}, ordered i-major.
std::vector<ComplexVector> sixteen_input_states();

/// 16-state averages of <psi_out| rho |psi_out> and Tr(rho^2), with
/// psi_out = target * psi_in.
GateMetrics gate_metrics(const std::vector<ControlSegment>& schedule,
                         const GateNoiseSpec& noise,
                         const ComplexMatrix& target = ideal_cnot());

/// Same average from an already assembled propagator.
GateMetrics gate_metrics(const Propagator& propagator, const ComplexMatrix& target = ideal_cnot());

/// Bitmask of the noise components switched on along a sweep axis.
enum NoiseAxis : unsigned {
  kGamma0 = 1u,
  kGamma1 = 2u,
  kGamma2 = 4u,
};

GateNoiseSpec noise_on_axis(unsigned axis, double gamma);
std::string axis_name(unsigned axis);

struct NoiseSweepRow {
  double gamma;
  GateMetrics metrics;
  /// Sum of the single-component errors; equals metrics.error on
  /// single-component axes.
  double error_sum;
};

std::vector<NoiseSweepRow> noise_sweep(unsigned axis, const std::vector<double>& grid,
                                       const FieldStrengths& strengths);

enum class Gamma2Model { constant, linear, quadratic };

/// gamma2 = c, c (1 + g0) or c (1 + g0^2).
double gamma2_for(Gamma2Model model, double c, double g0);

struct CouplingBase {
  double gamma0 = 0.001;
  double gamma1 = 0.001;
  double gamma2_scale = 0.001;
  double eps0 = 1.0;
  double j0 = 1.0;
};

struct CouplingSweepRow {
  double g0;
  double gamma2;
  double error;
};

std::vector<CouplingSweepRow> coupling_sweep(const std::vector<double>& g0_grid,
                                             Gamma2Model model, const CouplingBase& base);

struct PopulationSample {
  double time;
  std::array<double, 4> populations;  // P00, P01, P10, P11
};

/// Population traces through the CNOT schedule for basis input
/// |basis_index> (0..3 = |00>..|11>).
std::vector<PopulationSample> time_resolved_run(int basis_index, const GateNoiseSpec& noise,
                                                const FieldStrengths& strengths,
                                                int samples_per_segment);

}  // namespace slq::gates
