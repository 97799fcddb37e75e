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

#include "slq/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slq::gates {

namespace {

using std::numbers::pi;

const QubitRegister& two_qubits() {
  static const QubitRegister reg(2);
  return reg;
}

int index_of(Qubit q) { return q == Qubit::a ? 0 : 1; }

ComplexMatrix flip_flop() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  return m;
}

double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

ComplexMatrix GateOp::unitary() const {
  ComplexMatrix generator;
  switch (kind) {
    case Kind::Zrot:
      generator = 0.5 * angle * embed(pauli(Pauli::Z), index_of(qubit), two_qubits());
      break;
    case Kind::Xrot:
      generator = 0.5 * angle * embed(pauli(Pauli::X), index_of(qubit), two_qubits());
      break;
    case Kind::XYrot:
      generator = angle * flip_flop();
      break;
  }
  return matrix_exponential(kI * generator);
}

void GateNoiseSpec::validate() const {
  for (double v : {g0, g1, g2}) {
    if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("negative noise strength");
  }
}

void FieldStrengths::validate() const {
  for (double v : {eps0, j0, gxy0}) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw std::invalid_argument("control field strengths must be positive");
    }
  }
}

std::vector<FluctuationChannel> gate_channels(const GateNoiseSpec& noise) {
  noise.validate();
  const auto& reg = two_qubits();
  const ComplexMatrix z = embed(pauli(Pauli::Z), 0, reg) + embed(pauli(Pauli::Z), 1, reg);
  const ComplexMatrix x = embed(pauli(Pauli::X), 0, reg) + embed(pauli(Pauli::X), 1, reg);
  std::vector<FluctuationChannel> out;
  out.emplace_back(z, noise.g0, "common");
  out.emplace_back(x, noise.g1, "common");
  out.emplace_back(flip_flop(), noise.g2, "coupling");
  return out;
}

NoiseModelSpec gate_noise_model(const GateNoiseSpec& noise) { return {gate_channels(noise)}; }

GateModel build_gate_model(const ControlSegment& fields, const GateNoiseSpec& noise) {
  return {segment_hamiltonian(fields), build_correlation_tensor(gate_channels(noise), 4)};
}

ControlSegment elementary_schedule(const GateOp& op, const FieldStrengths& strengths) {
  strengths.validate();
  if (!std::isfinite(op.angle) || op.angle == 0.0) {
    throw std::invalid_argument("gate angle must be finite and nonzero");
  }
  const double alpha = op.angle;
  ControlSegment seg;
  switch (op.kind) {
    case GateOp::Kind::Zrot:
      (op.qubit == Qubit::a ? seg.eps_a : seg.eps_b) = -strengths.eps0 * sign(alpha);
      seg.duration = std::abs(alpha) / (2.0 * strengths.eps0);
      break;
    case GateOp::Kind::Xrot:
      (op.qubit == Qubit::a ? seg.j_a : seg.j_b) = -strengths.j0 * sign(alpha);
      seg.duration = std::abs(alpha) / (2.0 * strengths.j0);
      break;
    case GateOp::Kind::XYrot:
      seg.g = -strengths.gxy0 * sign(alpha);
      seg.duration = std::abs(alpha) / strengths.gxy0;
      break;
  }
  return seg;
}

std::vector<GateOp> cnot_sequence() {
  return {GateOp::zrot(Qubit::a, -pi / 2), GateOp::zrot(Qubit::b, -pi / 2),
          GateOp::xyrot(pi / 2),           GateOp::xrot(Qubit::a, -pi / 2),
          GateOp::xyrot(-pi / 2),          GateOp::xrot(Qubit::b, -pi),
          GateOp::zrot(Qubit::b, -pi / 2), GateOp::xrot(Qubit::b, pi / 2)};
}

std::vector<ControlSegment> cnot_schedule(const FieldStrengths& strengths) {
  const auto ops = cnot_sequence();
  std::vector<ControlSegment> out;
  // Both leading z rotations have the same duration; run them together.
  ControlSegment first = elementary_schedule(ops[0], strengths);
  first.eps_b = elementary_schedule(ops[1], strengths).eps_b;
  out.push_back(first);
  for (std::size_t i = 2; i < ops.size(); ++i) out.push_back(elementary_schedule(ops[i], strengths));
  return out;
}

double schedule_duration(const std::vector<ControlSegment>& segments) {
  double total = 0.0;
  for (const auto& s : segments) total += s.duration;
  return total;
}

ComplexMatrix ideal_cnot() {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  u(2, 3) = 1.0;
  u(3, 2) = 1.0;
  return u;
}

std::vector<ComplexVector> sixteen_input_states() {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<ComplexVector, 4> phi;
  for (auto& v : phi) v.resize(2);
  phi[0] << 1.0, 0.0;
  phi[1] << 0.0, 1.0;
  phi[2] << s, s;
  phi[3] << s, kI * s;
  std::vector<ComplexVector> out;
  out.reserve(16);
  for (const auto& a : phi) {
    for (const auto& b : phi) {
      ComplexVector v(4);
      v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
      out.push_back(std::move(v));
    }
  }
  return out;
}

GateMetrics gate_metrics(const Propagator& propagator, const ComplexMatrix& target) {
  double fidelity = 0.0;
  double purity = 0.0;
  for (const auto& psi : sixteen_input_states()) {
    const DensityMatrix rho =
        validated_state(propagator.apply(psi * psi.adjoint()));
    fidelity += rho.overlap(target * psi);
    purity += rho.purity();
  }
  fidelity /= 16.0;
  purity /= 16.0;
  return {fidelity, purity, 1.0 - fidelity};
}

GateMetrics gate_metrics(const std::vector<ControlSegment>& schedule,
                         const GateNoiseSpec& noise, const ComplexMatrix& target) {
  return gate_metrics(schedule_propagator(schedule, gate_noise_model(noise)), target);
}

GateNoiseSpec noise_on_axis(unsigned axis, double gamma) {
  if (axis == 0 || axis > 7) throw std::invalid_argument("noise axis must select gamma0, gamma1 and/or gamma2");
  GateNoiseSpec n;
  if (axis & kGamma0) n.g0 = gamma;
  if (axis & kGamma1) n.g1 = gamma;
  if (axis & kGamma2) n.g2 = gamma;
  n.validate();
  return n;
}

std::string axis_name(unsigned axis) {
  std::string name;
  for (unsigned bit : {kGamma0, kGamma1, kGamma2}) {
    if (!(axis & bit)) continue;
    if (!name.empty()) name += "+";
    name += bit == kGamma0 ? "gamma0" : bit == kGamma1 ? "gamma1" : "gamma2";
  }
  return name;
}

std::vector<NoiseSweepRow> noise_sweep(unsigned axis, const std::vector<double>& grid,
                                       const FieldStrengths& strengths) {
  const auto schedule = cnot_schedule(strengths);
  std::vector<NoiseSweepRow> rows;
  rows.reserve(grid.size());
  for (double gamma : grid) {
    NoiseSweepRow row{gamma, gate_metrics(schedule, noise_on_axis(axis, gamma)), 0.0};
    const bool single = axis == kGamma0 || axis == kGamma1 || axis == kGamma2;
    if (single) {
      row.error_sum = row.metrics.error;
    } else {
      for (unsigned bit : {kGamma0, kGamma1, kGamma2}) {
        if (axis & bit) row.error_sum += gate_metrics(schedule, noise_on_axis(bit, gamma)).error;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

double gamma2_for(Gamma2Model model, double c, double g0) {
  switch (model) {
    case Gamma2Model::constant: return c;
    case Gamma2Model::linear: return c * (1.0 + g0);
    case Gamma2Model::quadratic: return c * (1.0 + g0 * g0);
  }
  return c;
}

std::vector<CouplingSweepRow> coupling_sweep(const std::vector<double>& g0_grid,
                                             Gamma2Model model, const CouplingBase& base) {
  std::vector<CouplingSweepRow> rows;
  rows.reserve(g0_grid.size());
  for (double g0 : g0_grid) {
    if (!(g0 > 0.0)) throw std::invalid_argument("coupling strength g0 must be positive");
    const double g2 = gamma2_for(model, base.gamma2_scale, g0);
    const FieldStrengths strengths{base.eps0, base.j0, g0};
    const GateNoiseSpec noise{base.gamma0, base.gamma1, g2};
    rows.push_back({g0, g2, gate_metrics(cnot_schedule(strengths), noise).error});
  }
  return rows;
}

std::vector<PopulationSample> time_resolved_run(int basis_index, const GateNoiseSpec& noise,
                                                const FieldStrengths& strengths,
                                                int samples_per_segment) {
  if (basis_index < 0 || basis_index > 3) throw std::out_of_range("basis index must be in 0..3");
  ComplexVector psi = ComplexVector::Zero(4);
  psi(basis_index) = 1.0;
  const auto states = propagate_schedule(cnot_schedule(strengths), gate_noise_model(noise),
                                         DensityMatrix::pure(psi), samples_per_segment);
  std::vector<PopulationSample> out;
  out.reserve(states.size());
  for (const auto& s : states) {
    out.push_back({s.time,
                   {s.rho.population(0), s.rho.population(1), s.rho.population(2),
                    s.rho.population(3)}});
  }
  return out;
}

}  // namespace slq::gates
