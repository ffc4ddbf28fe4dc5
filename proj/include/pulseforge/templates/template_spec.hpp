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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/pulse/params.hpp"
#include "pulseforge/pulse/schedule.hpp"

namespace pulseforge::templates {

// Pulse design spaces. 1-6 are the proposed families (even ids pin the CR
// amplitude), 7-12 are random controls matched to id - 6.
enum class TemplateId : int {
  kHardwareEfficient = 1,
  kHardwareEfficientFixCr = 2,
  kDecay = 3,
  kDecayFixCr = 4,
  kBlock = 5,
  kBlockFixCr = 6,
  kRandom7 = 7,
  kRandom8 = 8,
  kRandom9 = 9,
  kRandom10 = 10,
  kRandom11 = 11,
  kRandom12 = 12,
  kDressed2Q = 13,      // 4 SQP around one CR
  kBlockpulse2Q = 14,   // 6 SQP, 2 CR
  kSingleQubitPulse = 15,
};

bool is_random(TemplateId id);
// 7..12 -> 1..6; identity for other ids.
TemplateId matched_id(TemplateId id);
std::string_view to_string(TemplateId id);

// Template fields pinned to a constant instead of exposed as parameters.
enum class FixedField : std::uint8_t {
  kCrAmplitude = 1,
  kCrAngle = 2,
  kCrDuration = 4,
  kSqpAmplitude = 8,
  kSqpAngle = 16,
  kSqpDuration = 32,
};
using FixedMask = std::uint8_t;

constexpr FixedMask fixed_mask(FixedField f) { return static_cast<FixedMask>(f); }

// Values for pinned fields; unset entries use the device defaults
// (cr_amplitude, angle 0, cr_duration, cal_amplitude, cal_duration).
struct FixedValues {
  std::optional<double> cr_amplitude;
  std::optional<double> cr_angle;
  std::optional<std::int64_t> cr_duration;
  std::optional<double> sqp_amplitude;
  std::optional<double> sqp_angle;
  std::optional<std::int64_t> sqp_duration;

  bool operator==(const FixedValues&) const = default;
};

struct TemplateSpec {
  TemplateId id = TemplateId::kHardwareEfficient;
  int n_qubits = 2;
  int n_layers = 1;
  // Extra pins on top of the family's own (ids 2/4/6 always pin the CR amplitude).
  FixedMask fixed = 0;
  FixedValues values;
  // Random templates only.
  std::uint64_t seed = 0;

  // Short display name, e.g. "ID3", "RAND7", "2QDressedpulse_fixamp".
  std::string name() const;

  nlohmann::json to_json() const;
  static TemplateSpec from_json(const nlohmann::json& j);

  bool operator==(const TemplateSpec&) const = default;
};

// Parses names accepted on the command line: "1".."12", "id3", "rand7",
// "dressed2q", "blockpulse2q", "sqp", with optional "_fixamp", "_fixang",
// "_fixdur" suffixes.
TemplateSpec parse_template_name(std::string_view name, int n_qubits, int n_layers, std::uint64_t seed);

// One logical operation of a template before timing is assigned.
struct TemplateOp {
  pulse::InstructionKind kind = pulse::InstructionKind::kPlaySqp;
  int q0 = 0;
  int q1 = -1;
  pulse::FieldMask free = pulse::kNoFields;

  bool operator==(const TemplateOp&) const = default;
};

// Logical operation list in program order. Throws TemplateError on bad
// qubit/layer counts.
std::vector<TemplateOp> template_ops(const TemplateSpec& spec);

// Longest chain of operations linked by shared qubits.
int logical_depth(const std::vector<TemplateOp>& ops, int n_qubits);

struct ParamCount {
  int n_params = 0;
  int n_cr = 0;
  int depth = 0;  // logical depth of the generated structure
};

// Cost estimate for the default (no extra pins) variant of id.
ParamCount param_count(TemplateId id, int n_qubits, int n_layers);

// Random control with the parameter and CR budget of match_id (1..6).
TemplateSpec random_pulse_template(int match_id, int n_qubits, int n_layers, std::uint64_t seed);

}  // namespace pulseforge::templates
