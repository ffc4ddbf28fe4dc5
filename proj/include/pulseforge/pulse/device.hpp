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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pulseforge::pulse {

// Effective cross-resonance Hamiltonian per unit drive amplitude, in rad/dt:
//   H = a_x ZX + a_y ZY + a_z ZZ + b_x IX + b_y IY + b_z IZ   (control (x) target)
struct CrCoefficients {
  double a_x = 0.0;
  double a_y = 0.0;
  double a_z = 0.0;
  double b_x = 0.0;
  double b_y = 0.0;
  double b_z = 0.0;

  bool operator==(const CrCoefficients&) const = default;
};

struct CouplingEdge {
  int control = 0;
  int target = 1;
  CrCoefficients coefficients;

  bool operator==(const CouplingEdge&) const = default;
};

struct DeviceModel {
  std::string name = "ideal";
  // Backend name used to look up the amplitude constraint table.
  std::string backend = "default";
  int n_qubits = 2;
  std::vector<CouplingEdge> edges;
  double dt_ns = 0.222;
  // Single-qubit calibration anchor: this amplitude over cal_duration with a
  // sigma = duration/4 gaussian is a pi rotation.
  double cal_amplitude = 0.2;
  std::int64_t cal_duration = 160;
  double drag_beta = 0.0;
  // Defaults used when a template pins a CR field.
  double cr_amplitude = 0.3;
  std::int64_t cr_duration = 512;
  double cr_rise_fall = 16.0;
  double cr_sigma = 8.0;
  // Gate name (lower case) -> duration in dt.
  std::map<std::string, std::int64_t> gate_durations;

  // Edge whose (control, target) matches exactly.
  const CouplingEdge* find_edge(int control, int target) const;
  // Edge coupling a and b in either orientation.
  const CouplingEdge* find_coupling(int a, int b) const;

  std::int64_t gate_duration(std::string_view gate) const;

  // Throws ParseError on inconsistent fields (edges out of range, dt <= 0,
  // cal_duration not a multiple of 16, ...).
  void validate() const;

  bool operator==(const DeviceModel&) const = default;
};

// Default gate duration table: virtual rz 0, single-qubit rotations 320, cx/cz 1056.
std::map<std::string, std::int64_t> default_gate_durations();

// Linear chain 0-1-...-(n-1), control = lower index, with the default CR
// coefficients (3.0e-3, 0, 2.0e-4, 1.0e-3, 0, 1.0e-4).
DeviceModel ideal_device(int n_qubits);

DeviceModel parse_device(std::string_view json_text);
std::string serialize_device(const DeviceModel& d);
DeviceModel load_device(const std::string& path);

}  // namespace pulseforge::pulse
