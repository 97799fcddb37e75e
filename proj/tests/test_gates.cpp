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

#include <catch2/catch.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slq/gates.hpp"
#include "support.hpp"

using namespace slq;
using namespace slq::gates;
using slq::test::max_abs;
using std::numbers::pi;

namespace {

// Largest deviation of |<u_i|v_i>| from 1 after removing one common phase.
double phase_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  const Complex overlap = (u.adjoint() * v).trace() / static_cast<double>(u.rows());
  const Complex phase = overlap / std::abs(overlap);
  return max_abs(u * phase - v);
}

ComplexMatrix zero_noise_unitary_from_propagator(const Propagator& p) {
  // P(|i><0|) U|0> = U|i>, and U|0> is the top eigenvector of P(|0><0|)
  // (fixed up to one phase shared by every column).
  ComplexMatrix e00 = ComplexMatrix::Zero(4, 4);
  e00(0, 0) = 1.0;
  const ComplexMatrix rho0 = p.apply(e00);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho0);
  const ComplexVector u0 = eig.eigenvectors().col(3);
  ComplexMatrix u(4, 4);
  for (int i = 0; i < 4; ++i) {
    ComplexMatrix ei0 = ComplexMatrix::Zero(4, 4);
    ei0(i, 0) = 1.0;
    u.col(i) = p.apply(ei0) * u0;
  }
  return u;
}

}  // namespace

TEST_CASE("gate model tensors and Hamiltonians", "[gates]") {
  SECTION("flip-flop noise alone") {
    const auto model = build_gate_model(ControlSegment{.duration = 1.0}, {0.0, 0.0, 0.05});
    REQUIRE(model.r.irreducible_count() == 1);
    CHECK(model.r(1, 2, 1, 2) == Approx(0.05));
    CHECK(model.r(2, 1, 1, 2) == Approx(0.05));
  }

  SECTION("the three channel operators sum to the fluctuation pattern") {
    ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
    for (const auto& ch : gate_channels({1.0, 1.0, 1.0})) sum += ch.op();
    ComplexMatrix expected(4, 4);
    // clang-format off
    expected << 2, 1, 1, 0,
                1, 0, 1, 1,
                1, 1, 0, 1,
                0, 1, 1, -2;
    // clang-format on
    REQUIRE(max_abs(sum - expected) == 0.0);
  }

  SECTION("bias-only segment gives a diagonal unitary") {
    ControlSegment seg{.eps_a = 1.0, .eps_b = 1.0, .duration = pi / 4};
    const auto model = build_gate_model(seg, {});
    const Propagator p = make_propagator(build_superoperator(model.h0, model.r), seg.duration);
    const ComplexMatrix u = zero_noise_unitary_from_propagator(p);
    ComplexMatrix off = u;
    off.diagonal().setZero();
    REQUIRE(max_abs(off) < 1e-12);
    const ComplexMatrix h = model.h0.matrix();
    CHECK(h(0, 0).real() == 2.0);
    CHECK(h(3, 3).real() == -2.0);
  }
}

TEST_CASE("elementary schedules", "[gates]") {
  const FieldStrengths unit;
  const auto z = elementary_schedule(GateOp::zrot(Qubit::a, -pi / 2), unit);
  CHECK(z.eps_a == 1.0);
  CHECK(z.duration == Approx(pi / 4));
  const auto xy = elementary_schedule(GateOp::xyrot(pi / 2), unit);
  CHECK(xy.g == -1.0);
  CHECK(xy.duration == Approx(pi / 2));
  REQUIRE_THROWS(elementary_schedule(GateOp::xrot(Qubit::b, 0.0), unit));
  REQUIRE_THROWS(elementary_schedule(GateOp::xrot(Qubit::b, 1.0), {1.0, -1.0, 1.0}));

  SECTION("zero-noise propagation reproduces each ideal operation up to phase") {
    std::vector<GateOp> ops = cnot_sequence();
    ops.push_back(GateOp::zrot(Qubit::b, 1.3));
    ops.push_back(GateOp::xyrot(-0.4));
    for (const FieldStrengths& s : {FieldStrengths{}, FieldStrengths{2.0, 0.5, 3.0}}) {
      for (const auto& op : ops) {
        const ControlSegment seg = elementary_schedule(op, s);
        const Propagator p = schedule_propagator({seg}, {});
        REQUIRE(phase_distance(op.unitary(), zero_noise_unitary_from_propagator(p)) < 1e-10);
      }
    }
  }
}

TEST_CASE("CNOT schedule", "[gates]") {
  const auto schedule = cnot_schedule({});
  REQUIRE(schedule.size() == 7);
  CHECK(schedule_duration(schedule) == Approx(2.5 * pi).epsilon(1e-14));
  CHECK(schedule_duration(cnot_schedule({2.0, 2.0, 2.0})) == Approx(1.25 * pi));

  SECTION("ideal operations multiply to CNOT") {
    ComplexMatrix product = ComplexMatrix::Identity(4, 4);
    for (const auto& op : cnot_sequence()) product = op.unitary() * product;
    REQUIRE(phase_distance(ideal_cnot(), product) < 1e-12);
  }

  SECTION("zero-noise propagation reproduces CNOT on all 16 inputs") {
    const Propagator p = schedule_propagator(schedule, {});
    for (const auto& psi : sixteen_input_states()) {
      const ComplexMatrix out = p.apply(psi * psi.adjoint());
      const ComplexVector target = ideal_cnot() * psi;
      REQUIRE((target.adjoint() * out * target)(0, 0).real() >= 1.0 - 1e-9);
    }
    const auto m = gate_metrics(p);
    CHECK(m.fidelity == Approx(1.0).margin(1e-9));
    CHECK(m.purity == Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("sixteen input states", "[gates]") {
  const auto states = sixteen_input_states();
  REQUIRE(states.size() == 16);
  ComplexMatrix gram = ComplexMatrix::Zero(4, 4);
  for (const auto& s : states) {
    REQUIRE(s.norm() == Approx(1.0).margin(1e-15));
    // Product state: the 2x2 coefficient matrix has rank one.
    REQUIRE(std::abs(s(0) * s(3) - s(1) * s(2)) < 1e-15);
    gram += s * s.adjoint();
  }
  REQUIRE(Eigen::FullPivLU<ComplexMatrix>(gram).rank() == 4);
  REQUIRE(std::abs(states[5](3) - Complex(1.0)) == 0.0);  // |1>|1>
}

TEST_CASE("gate metrics bounds", "[gates]") {
  const Propagator depolarize{4, [] {
                                ComplexMatrix m = ComplexMatrix::Zero(16, 16);
                                for (int a = 0; a < 4; ++a)
                                  for (int b = 0; b < 4; ++b) m(a * 4 + a, b * 4 + b) = 0.25;
                                return m;
                              }(),
                              1.0};
  const auto mixed = gate_metrics(depolarize);
  CHECK(mixed.fidelity == Approx(0.25).margin(1e-15));
  CHECK(mixed.purity == Approx(0.25).margin(1e-15));
  CHECK(mixed.error == Approx(0.75).margin(1e-15));

  SECTION("single-axis range and monotonicity") {
    std::vector<double> grid{0.0};
    for (int k = 0; k <= 20; ++k) grid.push_back(std::pow(10.0, -4.0 + 5.0 * k / 20.0));
    for (unsigned axis : {kGamma0, kGamma1, kGamma2}) {
      INFO(axis_name(axis));
      const auto rows = noise_sweep(axis, grid, {});
      REQUIRE(rows.front().metrics.error == Approx(0.0).margin(1e-9));
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& m = rows[k].metrics;
        REQUIRE(m.fidelity >= 0.25 - 1e-12);
        REQUIRE(m.fidelity <= 1.0 + 1e-12);
        REQUIRE(m.purity >= 0.25 - 1e-12);
        REQUIRE(m.purity <= 1.0 + 1e-12);
        // Past gamma ~ 1 strong noise freezes the gate (Zeno) and purity
        // climbs back; see the turnover case below.
        if (k > 0 && grid[k] <= 0.5) {
          REQUIRE(m.fidelity <= rows[k - 1].metrics.fidelity + 1e-12);
          REQUIRE(m.purity <= rows[k - 1].metrics.purity + 1e-12);
        }
      }
    }
  }

  SECTION("purity turns back up under strong noise") {
    for (unsigned axis : {kGamma0, kGamma1, kGamma2}) {
      INFO(axis_name(axis));
      const auto rows = noise_sweep(axis, {1.0, 10.0}, {});
      CHECK(rows[1].metrics.purity > rows[0].metrics.purity);
      CHECK(rows[1].metrics.error < 0.75 - 0.02);
    }
  }

  SECTION("average does not depend on input order") {
    const Propagator p = schedule_propagator(cnot_schedule({}), gate_noise_model({0.01, 0.02, 0.03}));
    auto states = sixteen_input_states();
    std::reverse(states.begin(), states.end());
    double fidelity = 0.0, purity = 0.0;
    for (const auto& s : states) {
      const DensityMatrix out(p.apply(s * s.adjoint()));
      fidelity += out.overlap(ideal_cnot() * s);
      purity += out.purity();
    }
    const auto m = gate_metrics(p);
    REQUIRE(std::abs(m.fidelity - fidelity / 16.0) <= 1e-15);
    REQUIRE(std::abs(m.purity - purity / 16.0) <= 1e-15);
  }
}

TEST_CASE("segment composability of metrics", "[gates]") {
  const auto schedule = cnot_schedule({});
  const NoiseModelSpec noise = gate_noise_model({0.02, 0.01, 0.05});
  const auto by_product = gate_metrics(schedule_propagator(schedule, noise));

  const auto parts = segment_propagators(schedule, noise);
  double fidelity = 0.0, purity = 0.0;
  for (const auto& psi : sixteen_input_states()) {
    ComplexMatrix rho = psi * psi.adjoint();
    for (const auto& p : parts) rho = p.apply(rho);
    const DensityMatrix out(rho);
    fidelity += out.overlap(ideal_cnot() * psi) / 16.0;
    purity += out.purity() / 16.0;
  }
  REQUIRE(std::abs(by_product.fidelity - fidelity) <= 1e-12);
  REQUIRE(std::abs(by_product.purity - purity) <= 1e-12);
}

TEST_CASE("flip-flop noise leaves |00> and |11> alone", "[gates]") {
  const ControlSegment seg{.g = -1.0, .duration = pi / 2};
  const auto model = build_gate_model(seg, {0.0, 0.0, 0.3});
  const Superoperator l = build_superoperator(model.h0, model.r);
  for (int i : {0, 3}) {
    ComplexMatrix e = ComplexMatrix::Zero(4, 4);
    e(i, i) = 1.0;
    REQUIRE(max_abs(l.apply(e)) == 0.0);
  }
}

TEST_CASE("time-resolved CNOT", "[gates]") {
  SECTION("zero noise, |11>") {
    const auto run = time_resolved_run(3, {}, {}, 10);
    REQUIRE(run.size() == 71);
    CHECK(run.front().populations[3] == 1.0);
    CHECK(run.back().populations[2] == Approx(1.0).margin(1e-9));
    CHECK(run.back().time == Approx(2.5 * pi));
    // First segment is diagonal: nothing moves.
    for (int k = 0; k <= 10; ++k) CHECK(run[static_cast<std::size_t>(k)].populations[3] == Approx(1.0).margin(1e-12));
  }

  SECTION("diagonal noise") {
    const auto run = time_resolved_run(3, {0.05, 0.0, 0.0}, {}, 10);
    CHECK(run.back().populations[2] < 1.0 - 1e-3);
    for (const auto& s : run) {
      const auto& p = s.populations;
      REQUIRE(p[0] + p[1] + p[2] + p[3] == Approx(1.0).margin(1e-12));
    }
  }

  REQUIRE_THROWS(time_resolved_run(4, {}, {}, 10));
}

TEST_CASE("noise specs validate", "[gates]") {
  REQUIRE_THROWS_WITH(gate_channels({-0.1, 0.0, 0.0}), Catch::Contains("negative noise strength"));
  REQUIRE_THROWS(noise_on_axis(0, 0.1));
  CHECK(axis_name(kGamma0 | kGamma2) == "gamma0+gamma2");
  CHECK(gamma2_for(Gamma2Model::quadratic, 0.001, 3.0) == Approx(0.01));
  CHECK(gamma2_for(Gamma2Model::linear, 0.001, 3.0) == Approx(0.004));
}
