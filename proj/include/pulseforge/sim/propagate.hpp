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

#pragma once

#include "pulseforge/pulse/device.hpp"
#include "pulseforge/pulse/envelope.hpp"
#include "pulseforge/pulse/params.hpp"
#include "pulseforge/pulse/schedule.hpp"
#include "pulseforge/qcore/state.hpp"

// Rotating-frame, on-resonance two-level propagation of pulse schedules.
//
// Single-qubit pulse: U = exp(-i theta/2 (cos(phi) X + sin(phi) Y)) with
//   theta = pi * (amplitude / cal_amplitude) * area(e, d) / area(e_cal, cal_duration)
// where e_cal is the sigma = cal_duration/4 gaussian.
//
// Cross-resonance pulse on (control, target): U = exp(-i A H_eff) with
//   A = amplitude * area(e, d) and H_eff the device coefficients with the
//   XY components of both the Z(x)A and I(x)B parts rotated by the drive phase.
namespace pulseforge::sim {

enum class PropagationMode { kEffectiveUnitary, kTimeStepped };

struct PropagationLevel {
  PropagationMode mode = PropagationMode::kEffectiveUnitary;
  // Sub-steps per dt sample; time_stepped only.
  int steps_per_dt = 1;
  // Accept durations off the 16-dt grid (used by finite-difference probes).
  bool relaxed_durations = false;

  static PropagationLevel time_stepped(int steps = 1) {
    return {PropagationMode::kTimeStepped, steps, false};
  }
};

// Hardware-level validation applied by the simulator: |amplitude| <= 1,
// duration >= 0 and on the 16-dt grid (unless relaxed), valid envelope.
// Throws ConstraintError / ShapeError.
void check_pulse(const pulse::PulseParams& p, const pulse::Envelope& e, bool relaxed_durations = false);

// Rotation angle produced by a single-qubit pulse.
double sqp_rotation_angle(const pulse::PulseParams& p, const pulse::Envelope& e,
                          const pulse::DeviceModel& d);

// Angle-rotated CR Hamiltonian (4x4, local qubit 0 = control).
qcore::CMatrix cr_hamiltonian(const pulse::CrCoefficients& c, double angle);

qcore::UnitaryMatrix sqp_unitary(const pulse::PulseParams& p, const pulse::Envelope& e,
                                 const pulse::DeviceModel& d, const PropagationLevel& level = {});

qcore::UnitaryMatrix cr_unitary(const pulse::PulseParams& p, const pulse::Envelope& e,
                                const pulse::CrCoefficients& coeffs, const pulse::DeviceModel& d,
                                const PropagationLevel& level = {});

// Unitary of one instruction on its channel's qubits (control first for CR).
qcore::UnitaryMatrix instruction_unitary(const pulse::Instruction& ins, const pulse::DeviceModel& d,
                                         const PropagationLevel& level = {});

// Applies the instructions in execution_order() to init.
qcore::StateVector evolve_schedule(const pulse::Schedule& s, const pulse::DeviceModel& d,
                                   qcore::StateVector init, const PropagationLevel& level = {});

// Dense product of all instruction unitaries; n_qubits <= 10.
qcore::UnitaryMatrix schedule_unitary(const pulse::Schedule& s, const pulse::DeviceModel& d,
                                      const PropagationLevel& level = {});

inline constexpr int kMaxUnitaryQubits = 10;

}  // namespace pulseforge::sim
