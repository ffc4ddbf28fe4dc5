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

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/pulse/device.hpp"
#include "pulseforge/pulse/envelope.hpp"
#include "pulseforge/pulse/params.hpp"

namespace pulseforge::pulse {

enum class InstructionKind { kPlaySqp, kPlayCr, kDelay };

std::string_view to_string(InstructionKind k);
InstructionKind instruction_kind_from_string(std::string_view name);

enum class ChannelType { kDrive, kControl };

// drive(q) carries single-qubit pulses; control(c, t) carries the CR drive of
// control qubit c at target t's frequency.
struct Channel {
  ChannelType type = ChannelType::kDrive;
  int control = 0;  // the driven qubit for drive channels
  int target = -1;  // -1 for drive channels

  static Channel drive(int q) { return {ChannelType::kDrive, q, -1}; }
  static Channel cr(int control, int target) { return {ChannelType::kControl, control, target}; }

  // Qubits the channel acts on, control first.
  std::vector<int> qubits() const;

  // Drive channels order before control channels, then by qubit indices. This
  // is the tie-break order for simultaneous instructions.
  auto operator<=>(const Channel&) const = default;
};

std::string to_string(const Channel& c);

struct Instruction {
  InstructionKind kind = InstructionKind::kPlaySqp;
  Channel channel;
  std::int64_t start = 0;
  PulseParams params;
  Envelope envelope;
  // Fields that are free template parameters, and their slot in the flat
  // parameter vector (-1 for pinned fields). Empty for hand-written schedules.
  FieldMask free = kNoFields;
  std::array<int, 3> slots{-1, -1, -1};

  std::int64_t end() const { return start + params.duration; }
  int slot(ParamField f) const;

  bool operator==(const Instruction&) const = default;
};

struct Schedule {
  int n_qubits = 1;
  std::vector<Instruction> instructions;
  // Template description (id, layers, seed, ...). Free-form object.
  nlohmann::json metadata = nlohmann::json::object();

  bool operator==(const Schedule&) const = default;
};

// Throws IndexError / DomainError for out-of-range qubits, negative starts and
// per-channel overlaps.
void check_schedule(const Schedule& s);

// Checks that every CR instruction sits on a coupled (control, target) pair.
void check_topology(const Schedule& s, const DeviceModel& d);

// Latest instruction end over all channels; 0 for an empty schedule.
std::int64_t schedule_duration(const Schedule& s);

// Instruction indices sorted by (start, channel, position).
std::vector<std::size_t> execution_order(const Schedule& s);

struct StructuralCounts {
  int n_params = 0;
  int n_cr = 0;
  int n_sqp = 0;
};

// Counts free-parameter fields and CR pulses in an instantiated schedule.
StructuralCounts structural_counts(const Schedule& s);

std::string serialize_schedule(const Schedule& s);
// Throws ParseError naming the offending instruction/field.
Schedule deserialize_schedule(std::string_view text);
Schedule load_schedule(const std::string& path);

}  // namespace pulseforge::pulse
