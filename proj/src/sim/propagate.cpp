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

#include "pulseforge/sim/propagate.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "pulseforge/common/error.hpp"
#include "pulseforge/qcore/pauli.hpp"

namespace pulseforge::sim {
namespace {

using qcore::CMatrix;
using qcore::Complex;
using qcore::UnitaryMatrix;

const CMatrix& pauli(std::string_view label) {
  static const CMatrix kX = qcore::pauli_operator("X");
  static const CMatrix kY = qcore::pauli_operator("Y");
  static const CMatrix kZX = qcore::pauli_operator("ZX");
  static const CMatrix kZY = qcore::pauli_operator("ZY");
  static const CMatrix kZZ = qcore::pauli_operator("ZZ");
  static const CMatrix kIX = qcore::pauli_operator("IX");
  static const CMatrix kIY = qcore::pauli_operator("IY");
  static const CMatrix kIZ = qcore::pauli_operator("IZ");
  if (label == "X") return kX;
  if (label == "Y") return kY;
  if (label == "ZX") return kZX;
  if (label == "ZY") return kZY;
  if (label == "ZZ") return kZZ;
  if (label == "IX") return kIX;
  if (label == "IY") return kIY;
  return kIZ;
}

double calibration_area(const pulse::DeviceModel& d) {
  return pulse::envelope_area(pulse::Envelope::gaussian_for(d.cal_duration), d.cal_duration);
}

// Product over envelope samples of exp(-i * weight * s(t) * h), each factor
// from a Pade matrix exponential. Later ticks multiply from the left.
CMatrix stepped_product(const CMatrix& h, double weight, const pulse::Envelope& e, std::int64_t duration,
                        int steps_per_dt) {
  if (steps_per_dt < 1) throw DomainError(fmt::format("steps_per_dt must be >= 1, got {}", steps_per_dt));
  CMatrix u = CMatrix::Identity(h.rows(), h.cols());
  const Complex minus_i(0.0, -1.0);
  for (std::int64_t t = 0; t < duration; ++t) {
    const double s = pulse::envelope_sample(e, duration, t);
    const CMatrix step = (minus_i * (weight * s / steps_per_dt) * h).exp();
    for (int k = 0; k < steps_per_dt; ++k) u = step * u;
  }
  return u;
}

struct CompiledStep {
  UnitaryMatrix unitary;
  std::vector<int> targets;
};

}  // namespace

void check_pulse(const pulse::PulseParams& p, const pulse::Envelope& e, bool relaxed_durations) {
  if (!std::isfinite(p.amplitude) || !std::isfinite(p.angle)) {
    throw ConstraintError(fmt::format("non-finite pulse parameters amplitude={} angle={}", p.amplitude, p.angle));
  }
  if (std::abs(p.amplitude) > 1.0) {
    throw ConstraintError(fmt::format("amplitude-out-of-range: |{}| exceeds the AWG limit 1", p.amplitude));
  }
  if (p.duration < 0) throw ConstraintError(fmt::format("duration-out-of-range: negative duration {}", p.duration));
  if (!relaxed_durations && p.duration % 16 != 0) {
    throw ConstraintError(fmt::format("duration-granularity: {} is not a multiple of 16", p.duration));
  }
  pulse::check_envelope(e, p.duration);
}

double sqp_rotation_angle(const pulse::PulseParams& p, const pulse::Envelope& e, const pulse::DeviceModel& d) {
  return std::numbers::pi * (p.amplitude / d.cal_amplitude) * pulse::envelope_area(e, p.duration) /
         calibration_area(d);
}

CMatrix cr_hamiltonian(const pulse::CrCoefficients& c, double angle) {
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  const double ax = c.a_x * cs - c.a_y * sn;
  const double ay = c.a_x * sn + c.a_y * cs;
  const double bx = c.b_x * cs - c.b_y * sn;
  const double by = c.b_x * sn + c.b_y * cs;
  return ax * pauli("ZX") + ay * pauli("ZY") + c.a_z * pauli("ZZ") + bx * pauli("IX") + by * pauli("IY") +
         c.b_z * pauli("IZ");
}

UnitaryMatrix sqp_unitary(const pulse::PulseParams& p, const pulse::Envelope& e, const pulse::DeviceModel& d,
                          const PropagationLevel& level) {
  check_pulse(p, e, level.relaxed_durations);
  const CMatrix axis = std::cos(p.angle) * pauli("X") + std::sin(p.angle) * pauli("Y");
  if (level.mode == PropagationMode::kTimeStepped) {
    const double weight = 0.5 * std::numbers::pi * (p.amplitude / d.cal_amplitude) / calibration_area(d);
    return UnitaryMatrix(stepped_product(axis, weight, e, p.duration, level.steps_per_dt));
  }
  const double theta = sqp_rotation_angle(p, e, d);
  CMatrix u = std::cos(theta / 2.0) * CMatrix::Identity(2, 2) - Complex(0.0, std::sin(theta / 2.0)) * axis;
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix cr_unitary(const pulse::PulseParams& p, const pulse::Envelope& e, const pulse::CrCoefficients& coeffs,
                         const pulse::DeviceModel& /*d*/, const PropagationLevel& level) {
  check_pulse(p, e, level.relaxed_durations);
  const CMatrix h = cr_hamiltonian(coeffs, p.angle);
  if (level.mode == PropagationMode::kTimeStepped) {
    return UnitaryMatrix(stepped_product(h, p.amplitude, e, p.duration, level.steps_per_dt));
  }
  const double strength = p.amplitude * pulse::envelope_area(e, p.duration);
  return UnitaryMatrix(qcore::exp_minus_i(h, strength));
}

UnitaryMatrix instruction_unitary(const pulse::Instruction& ins, const pulse::DeviceModel& d,
                                  const PropagationLevel& level) {
  switch (ins.kind) {
    case pulse::InstructionKind::kPlaySqp:
      return sqp_unitary(ins.params, ins.envelope, d, level);
    case pulse::InstructionKind::kPlayCr: {
      const auto* edge = d.find_edge(ins.channel.control, ins.channel.target);
      if (edge == nullptr) {
        throw TopologyError(fmt::format("no CR coupling {} -> {} on device \"{}\"", ins.channel.control,
                                        ins.channel.target, d.name));
      }
      return cr_unitary(ins.params, ins.envelope, edge->coefficients, d, level);
    }
    case pulse::InstructionKind::kDelay:
      break;
  }
  return UnitaryMatrix::identity(static_cast<int>(ins.channel.qubits().size()));
}

namespace {

std::vector<CompiledStep> compile(const pulse::Schedule& s, const pulse::DeviceModel& d,
                                  const PropagationLevel& level) {
  pulse::check_topology(s, d);
  std::vector<CompiledStep> steps;
  steps.reserve(s.instructions.size());
  for (std::size_t idx : pulse::execution_order(s)) {
    const auto& ins = s.instructions[idx];
    if (ins.kind == pulse::InstructionKind::kDelay) continue;
    steps.push_back({instruction_unitary(ins, d, level), ins.channel.qubits()});
  }
  return steps;
}

}  // namespace

qcore::StateVector evolve_schedule(const pulse::Schedule& s, const pulse::DeviceModel& d, qcore::StateVector init,
                                   const PropagationLevel& level) {
  if (init.n_qubits() != s.n_qubits) {
    throw DimensionError(fmt::format("schedule has {} qubits, initial state {}", s.n_qubits, init.n_qubits()));
  }
  for (const auto& step : compile(s, d, level)) {
    init = qcore::apply_embedded_unitary(std::move(init), step.unitary, step.targets);
  }
  return init;
}

UnitaryMatrix schedule_unitary(const pulse::Schedule& s, const pulse::DeviceModel& d, const PropagationLevel& level) {
  if (s.n_qubits > kMaxUnitaryQubits) {
    throw CapacityError(fmt::format("schedule_unitary limited to {} qubits, got {}", kMaxUnitaryQubits, s.n_qubits));
  }
  const auto steps = compile(s, d, level);
  const Eigen::Index dim = Eigen::Index{1} << s.n_qubits;
  // Evolving basis columns is cheaper than multiplying dense embeddings.
  CMatrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    auto state = qcore::StateVector::basis(s.n_qubits, static_cast<std::uint64_t>(col));
    for (const auto& step : steps) state = qcore::apply_embedded_unitary(std::move(state), step.unitary, step.targets);
    u.col(col) = state.amplitudes();
  }
  return UnitaryMatrix(std::move(u));
}

}  // namespace pulseforge::sim
