// Copyright 2026 The PulseForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/rng.hpp"
#include "pulseforge/qcore/pauli.hpp"
#include "pulseforge/sim/propagate.hpp"

namespace pulseforge::sim {
namespace {

using pulse::Envelope;
using pulse::PulseParams;
using qcore::CMatrix;
using qcore::Complex;
using qcore::StateVector;

constexpr double kPi = std::numbers::pi;

// Operator distance up to a global phase: min over phi of ||A - e^{i phi} B||.
double phase_distance(const CMatrix& a, const CMatrix& b) {
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

CMatrix rx(double t) {
  CMatrix m(2, 2);
  m << std::cos(t / 2), Complex(0, -std::sin(t / 2)), Complex(0, -std::sin(t / 2)), std::cos(t / 2);
  return m;
}

TEST(Sqp, ZeroAmplitudeIsIdentity) {
  const auto d = pulse::ideal_device(1);
  const auto u = sqp_unitary({0.0, 1.0, 160, 0.0}, Envelope::gaussian_for(160), d);
  EXPECT_NEAR((u.entries() - CMatrix::Identity(2, 2)).norm(), 0.0, 1e-15);
}

TEST(Sqp, CalibratedPulseIsXGate) {
  const auto d = pulse::ideal_device(1);
  const auto u = sqp_unitary({0.2, 0.0, 160, 0.0}, Envelope::gaussian_for(160), d);
  CMatrix minus_i_x(2, 2);
  minus_i_x << 0, Complex(0, -1), Complex(0, -1), 0;
  EXPECT_NEAR((u.entries() - minus_i_x).norm(), 0.0, 1e-12);
  const auto out = evolve_schedule(
      pulse::Schedule{1, {pulse::Instruction{pulse::InstructionKind::kPlaySqp, pulse::Channel::drive(0), 0,
                                             {0.2, 0.0, 160, 0.0}, Envelope::gaussian_for(160)}}},
      d, StateVector(1));
  EXPECT_GE(qcore::fidelity(out, StateVector::basis(1, 1)), 1.0 - 1e-10);
}

TEST(Sqp, HalfAmplitudeAlongYGivesEqualSuperposition) {
  const auto d = pulse::ideal_device(1);
  const auto u = sqp_unitary({0.1, kPi / 2, 160, 0.0}, Envelope::gaussian_for(160), d);
  // exp(-i pi/4 Y)|0> = (|0> + |1>)/sqrt 2.
  EXPECT_NEAR(std::abs(u(0, 0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-12);
}

TEST(Sqp, RotationAngleScalesWithAmplitudeAndArea) {
  const auto d = pulse::ideal_device(1);
  const auto e = Envelope::gaussian_for(160);
  EXPECT_NEAR(sqp_rotation_angle({0.2, 0.0, 160, 0.0}, e, d), kPi, 1e-12);
  EXPECT_NEAR(sqp_rotation_angle({-0.05, 0.0, 160, 0.0}, e, d), -kPi / 4, 1e-12);
  const auto e320 = Envelope::gaussian_for(320);
  const double ratio = pulse::envelope_area(e320, 320) / pulse::envelope_area(e, 160);
  EXPECT_NEAR(sqp_rotation_angle({0.2, 0.0, 320, 0.0}, e320, d), kPi * ratio, 1e-12);
}

TEST(Sqp, RejectsOffGridDurationUnlessRelaxed) {
  const auto d = pulse::ideal_device(1);
  const PulseParams p{0.2, 0.0, 170, 0.0};
  EXPECT_THROW(sqp_unitary(p, Envelope::gaussian_for(170), d), ConstraintError);
  PropagationLevel relaxed;
  relaxed.relaxed_durations = true;
  EXPECT_NO_THROW(sqp_unitary(p, Envelope::gaussian_for(170), d, relaxed));
  EXPECT_THROW(sqp_unitary({1.5, 0.0, 160, 0.0}, Envelope::gaussian_for(160), d), ConstraintError);
}

TEST(Cr, ZeroAmplitudeIsIdentity) {
  const auto d = pulse::ideal_device(2);
  const auto u = cr_unitary({0.0, 0.4, 512, 0.0}, Envelope::gaussian_square(8, 16), d.edges[0].coefficients, d);
  EXPECT_NEAR((u.entries() - CMatrix::Identity(4, 4)).norm(), 0.0, 1e-15);
}

TEST(Cr, PureZxIsControlledRotation) {
  const auto d = pulse::ideal_device(2);
  const pulse::CrCoefficients zx{1e-3, 0, 0, 0, 0, 0};
  const PulseParams p{0.4, 0.0, 512, 0.0};
  const auto e = Envelope::gaussian_square(8, 16);
  const auto u = cr_unitary(p, e, zx, d);
  // exp(-i A a_x ZX) = exp(-i (theta/2) Z X) with theta = 2 A a_x.
  const double theta = 2.0 * p.amplitude * pulse::envelope_area(e, 512) * zx.a_x;
  // Local qubit 0 (control) is the low bit: control |0> block is rows/cols {0, 2}.
  CMatrix c0(2, 2);
  CMatrix c1(2, 2);
  c0 << u(0, 0), u(0, 2), u(2, 0), u(2, 2);
  c1 << u(1, 1), u(1, 3), u(3, 1), u(3, 3);
  EXPECT_NEAR((c0 - rx(theta)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((c1 - rx(-theta)).norm(), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(0, 1)), 0.0, 1e-14);
}

TEST(Cr, PureIxIsLocalRotation) {
  const auto d = pulse::ideal_device(2);
  const pulse::CrCoefficients ix{0, 0, 0, 1e-3, 0, 0};
  const PulseParams p{0.25, 0.0, 256, 0.0};
  const auto e = Envelope::gaussian_square(8, 16);
  const auto u = cr_unitary(p, e, ix, d);
  const double theta = 2.0 * p.amplitude * pulse::envelope_area(e, 256) * ix.b_x;
  const int targets[] = {1};
  const auto expect = qcore::embed_unitary(qcore::UnitaryMatrix(rx(theta)), targets, 2);
  EXPECT_NEAR((u.entries() - expect.entries()).norm(), 0.0, 1e-12);
}

TEST(Cr, DriveAngleRotatesXyCoefficients) {
  const pulse::CrCoefficients c{3e-3, 0, 2e-4, 1e-3, 0, 1e-4};
  const auto h = cr_hamiltonian(c, kPi / 2);
  // At phi = pi/2 the ZX and IX parts become ZY and IY. Label character 0 is the control.
  const CMatrix expect = 3e-3 * qcore::pauli_operator("ZY") + 2e-4 * qcore::pauli_operator("ZZ") +
                         1e-3 * qcore::pauli_operator("IY") + 1e-4 * qcore::pauli_operator("IZ");
  EXPECT_NEAR((h - expect).norm(), 0.0, 1e-15);
}

TEST(Propagation, EffectiveMatchesTimeSteppedOnRandomPulses) {
  const auto d = pulse::ideal_device(2);
  StreamRng rng(31, 0);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::int64_t dur = 16 * (16 + static_cast<std::int64_t>(rng.below(49)));
    const PulseParams p{rng.uniform(-1, 1), rng.uniform(0, 2 * kPi), dur, 0.0};
    if (k % 2 == 0) {
      const auto e = Envelope::gaussian_for(dur);
      worst = std::max(worst, (sqp_unitary(p, e, d).entries() -
                               sqp_unitary(p, e, d, PropagationLevel::time_stepped()).entries())
                                  .norm());
    } else {
      const auto e = Envelope::gaussian_square(8, 16);
      const auto& c = d.edges[0].coefficients;
      worst = std::max(worst, (cr_unitary(p, e, c, d).entries() -
                               cr_unitary(p, e, c, d, PropagationLevel::time_stepped(2)).entries())
                                  .norm());
    }
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(Propagation, EmptyScheduleLeavesStateUnchanged) {
  const auto d = pulse::ideal_device(3);
  pulse::Schedule s;
  s.n_qubits = 3;
  const auto init = StateVector::basis(3, 5);
  EXPECT_EQ(evolve_schedule(s, d, init).amplitudes(), init.amplitudes());
  EXPECT_NEAR((schedule_unitary(s, d).entries() - CMatrix::Identity(8, 8)).norm(), 0.0, 0.0);
}

TEST(Propagation, SinglePulseOnSecondQubitEmbedsAsKron) {
  const auto d = pulse::ideal_device(2);
  const PulseParams p{0.13, 0.7, 160, 0.0};
  const auto e = Envelope::gaussian_for(160);
  pulse::Schedule s{2, {pulse::Instruction{pulse::InstructionKind::kPlaySqp, pulse::Channel::drive(1), 0, p, e}}};
  const auto u2 = sqp_unitary(p, e, d).entries();
  // Qubit 1 is the high bit: the dense operator is U (x) I.
  CMatrix expect(4, 4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) expect.block(2 * r, 2 * c, 2, 2) = u2(r, c) * CMatrix::Identity(2, 2);
  }
  EXPECT_NEAR((schedule_unitary(s, d).entries() - expect).norm(), 0.0, 1e-14);
}

TEST(Propagation, ScheduleUnitaryAgreesWithEvolution) {
  const auto d = pulse::ideal_device(3);
  StreamRng rng(32, 0);
  pulse::Schedule s;
  s.n_qubits = 3;
  std::int64_t t = 0;
  for (int k = 0; k < 6; ++k) {
    const int q = static_cast<int>(rng.below(3));
    s.instructions.push_back({pulse::InstructionKind::kPlaySqp, pulse::Channel::drive(q), t,
                              {rng.uniform(-1, 1), rng.uniform(0, 6), 160, 0.0}, Envelope::gaussian_for(160)});
    const int c = static_cast<int>(rng.below(2));
    s.instructions.push_back({pulse::InstructionKind::kPlayCr, pulse::Channel::cr(c, c + 1), t + 160,
                              {rng.uniform(-1, 1), rng.uniform(0, 6), 256, 0.0}, Envelope::gaussian_square(8, 16)});
    t += 416;
  }
  const auto u = schedule_unitary(s, d);
  EXPECT_LT(u.unitarity_error(), 1e-9);
  const auto psi = evolve_schedule(s, d, StateVector(3));
  EXPECT_NEAR((u.entries().col(0) - psi.amplitudes()).norm(), 0.0, 1e-12);
  EXPECT_LE(phase_distance(u.entries(), schedule_unitary(s, d, PropagationLevel::time_stepped()).entries()), 1e-8);
}

TEST(Propagation, RejectsUncoupledCr) {
  const auto d = pulse::ideal_device(3);
  pulse::Schedule s{3, {pulse::Instruction{pulse::InstructionKind::kPlayCr, pulse::Channel::cr(0, 2), 0,
                                           {0.3, 0.0, 256, 0.0}, Envelope::gaussian_square(8, 16)}}};
  EXPECT_THROW(evolve_schedule(s, d, StateVector(3)), TopologyError);
}

TEST(Propagation, CapacityLimit) {
  const auto d = pulse::ideal_device(11);
  pulse::Schedule s;
  s.n_qubits = 11;
  EXPECT_THROW(schedule_unitary(s, d), CapacityError);
}

// Bloch-sphere phenomenology of a single calibrated-length pulse.
TEST(Bloch, AngleSweepKeepsZ) {
  const auto d = pulse::ideal_device(1);
  const auto e = Envelope::gaussian_for(160);
  StreamRng rng(33, 0);
  const auto z_of = [&](double angle) {
    const auto s = evolve_schedule(pulse::Schedule{1, {pulse::Instruction{pulse::InstructionKind::kPlaySqp,
                                                                           pulse::Channel::drive(0), 0,
                                                                           {0.08, angle, 160, 0.0}, e}}},
                                   d, StateVector(1));
    return qcore::pauli_expectation(s, "Z");
  };
  const double z0 = z_of(0.0);
  for (int k = 0; k < 500; ++k) EXPECT_NEAR(z_of(rng.uniform(0, 2 * kPi)), z0, 1e-9);
}

TEST(Bloch, AmplitudeSweepKeepsXZero) {
  const auto d = pulse::ideal_device(1);
  const auto e = Envelope::gaussian_for(160);
  StreamRng rng(34, 0);
  for (int k = 0; k < 500; ++k) {
    const auto u = sqp_unitary({rng.uniform(-1, 1), 0.0, 160, 0.0}, e, d);
    const StateVector s(1, u.entries().col(0));
    EXPECT_NEAR(qcore::pauli_expectation(s, "X"), 0.0, 1e-9);
  }
}

}  // namespace
}  // namespace pulseforge::sim
