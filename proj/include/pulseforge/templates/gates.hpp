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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pulseforge/pulse/device.hpp"
#include "pulseforge/qcore/state.hpp"

namespace pulseforge::templates {

enum class GateBaseline { kRz, kRx, kRxRz, kZyz, kRxCx2Q, kUniversal2Q, kTwoLocal, kRealAmp };

std::string_view to_string(GateBaseline b);
// Case-insensitive; throws TemplateError for unknown names.
GateBaseline gate_baseline_from_string(std::string_view name);
bool is_gate_baseline_name(std::string_view name);

// One gate of a baseline circuit. Rotations read their angle from
// theta[slot]; cx/cz take qubits[0] as control.
struct Gate {
  std::string name;  // rx, ry, rz, cx, cz
  std::vector<int> qubits;
  int slot = -1;
};

struct GateCircuit {
  int n_qubits = 1;
  int n_params = 0;
  std::vector<Gate> gates;
};

// Circuit layouts:
//   RZ, RX          one rotation per qubit
//   RXRZ            rx then rz per qubit
//   ZYZ             rz ry rz per qubit
//   RXCX2Q          rx x rx, cx(0,1), rx x rx
//   UNIVERSAL2Q     three-CNOT universal two-qubit circuit, 15 angles
//   TWOLOCAL        reps x (ry layer, cz on all pairs) + final ry layer
//   REALAMP         reps x (ry layer, cx reverse-linear) + final ry layer
GateCircuit gate_circuit(GateBaseline b, int n_qubits, int reps = 3);

// 2x2 or 4x4 matrix of a named gate (local qubit 0 = first listed qubit).
qcore::CMatrix gate_matrix(std::string_view name, double angle = 0.0);

// ASAP schedule length using the device gate-duration table.
std::int64_t circuit_duration(const GateCircuit& c, const pulse::DeviceModel& d);

qcore::StateVector apply_circuit(const GateCircuit& c, std::span<const double> theta, qcore::StateVector state);
qcore::UnitaryMatrix circuit_unitary(const GateCircuit& c, std::span<const double> theta);

struct GateBaselineResult {
  qcore::UnitaryMatrix unitary;
  std::int64_t duration_dt = 0;
  int n_params = 0;
};

GateBaselineResult gate_baseline(std::string_view name, int n_qubits, std::span<const double> theta,
                                 const pulse::DeviceModel& d, int reps = 3);

}  // namespace pulseforge::templates
