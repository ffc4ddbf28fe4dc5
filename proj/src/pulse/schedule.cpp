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

#include "pulseforge/pulse/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::pulse {
namespace {

using nlohmann::json;

constexpr int kScheduleVersion = 1;

int field_index(ParamField f) {
  switch (f) {
    case ParamField::kAmplitude: return 0;
    case ParamField::kAngle: return 1;
    case ParamField::kDuration: return 2;
  }
  return 0;
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(fmt::format("{}: missing field \"{}\"", where, key));
  }
  return j.at(key);
}

double require_number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) throw ParseError(fmt::format("{}.{}: expected a number", where, key));
  return v.get<double>();
}

std::int64_t require_integer(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) {
    throw ParseError(fmt::format("{}.{}: expected an integer number of dt, got {}", where, key, v.dump()));
  }
  return v.get<std::int64_t>();
}

json instruction_json(const Instruction& ins) {
  json j;
  j["kind"] = to_string(ins.kind);
  j["channel"] = {{"type", ins.channel.type == ChannelType::kDrive ? "drive" : "control"},
                  {"qubits", ins.channel.qubits()}};
  j["start"] = ins.start;
  j["duration"] = ins.params.duration;
  j["amplitude"] = ins.params.amplitude;
  j["angle"] = ins.params.angle;
  if (ins.params.frequency_offset != 0.0) j["frequency_offset"] = ins.params.frequency_offset;
  j["envelope"] = {{"kind", to_string(ins.envelope.kind)},
                   {"sigma", ins.envelope.sigma},
                   {"rise_fall", ins.envelope.rise_fall},
                   {"drag_beta", ins.envelope.drag_beta}};
  if (ins.free != kNoFields) {
    json free = json::object();
    for (ParamField f : kFieldOrder) {
      if (has_field(ins.free, f)) free[std::string(to_string(f))] = ins.slot(f);
    }
    j["free"] = free;
  }
  return j;
}

Instruction parse_instruction(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(fmt::format("{}: expected an object", where));
  Instruction ins;
  const json& kind = require(j, "kind", where);
  if (!kind.is_string()) throw ParseError(fmt::format("{}.kind: expected a string", where));
  try {
    ins.kind = instruction_kind_from_string(kind.get<std::string>());
  } catch (const FormatError& e) {
    throw ParseError(fmt::format("{}.kind: {}", where, e.what()));
  }

  const std::string cwhere = where + ".channel";
  const json& ch = require(j, "channel", where);
  const json& type = require(ch, "type", cwhere);
  const json& qubits = require(ch, "qubits", cwhere);
  if (!qubits.is_array() || !std::all_of(qubits.begin(), qubits.end(), [](const json& q) { return q.is_number_integer(); })) {
    throw ParseError(fmt::format("{}.qubits: expected an array of integers", cwhere));
  }
  if (type == "drive") {
    if (qubits.size() != 1) throw ParseError(fmt::format("{}: drive channel takes one qubit", cwhere));
    ins.channel = Channel::drive(qubits[0].get<int>());
  } else if (type == "control") {
    if (qubits.size() != 2) throw ParseError(fmt::format("{}: control channel takes two qubits", cwhere));
    ins.channel = Channel::cr(qubits[0].get<int>(), qubits[1].get<int>());
  } else {
    throw ParseError(fmt::format("{}.type: expected \"drive\" or \"control\", got {}", cwhere, type.dump()));
  }
  if ((ins.kind == InstructionKind::kPlayCr) != (ins.channel.type == ChannelType::kControl) &&
      ins.kind != InstructionKind::kDelay) {
    throw ParseError(fmt::format("{}: {} instruction on {} channel", where, to_string(ins.kind), to_string(ins.channel)));
  }

  ins.start = require_integer(j, "start", where);
  ins.params.duration = require_integer(j, "duration", where);
  ins.params.amplitude = j.contains("amplitude") ? require_number(j, "amplitude", where) : 0.0;
  ins.params.angle = j.contains("angle") ? require_number(j, "angle", where) : 0.0;
  if (j.contains("frequency_offset")) ins.params.frequency_offset = require_number(j, "frequency_offset", where);

  if (j.contains("envelope")) {
    const std::string ewhere = where + ".envelope";
    const json& env = j["envelope"];
    const json& ek = require(env, "kind", ewhere);
    if (!ek.is_string()) throw ParseError(fmt::format("{}.kind: expected a string", ewhere));
    try {
      ins.envelope.kind = envelope_kind_from_string(ek.get<std::string>());
    } catch (const FormatError& e) {
      throw ParseError(fmt::format("{}.kind: {}", ewhere, e.what()));
    }
    ins.envelope.sigma = require_number(env, "sigma", ewhere);
    ins.envelope.rise_fall = env.contains("rise_fall") ? require_number(env, "rise_fall", ewhere) : 0.0;
    ins.envelope.drag_beta = env.contains("drag_beta") ? require_number(env, "drag_beta", ewhere) : 0.0;
  } else if (ins.kind == InstructionKind::kPlayCr) {
    throw ParseError(fmt::format("{}: missing field \"envelope\"", where));
  } else {
    ins.envelope = Envelope::gaussian_for(std::max<std::int64_t>(ins.params.duration, 1));
  }

  if (j.contains("free")) {
    const json& free = j["free"];
    if (!free.is_object()) throw ParseError(fmt::format("{}.free: expected an object", where));
    for (const auto& [name, slot] : free.items()) {
      ParamField f;
      try {
        f = param_field_from_string(name);
      } catch (const FormatError& e) {
        throw ParseError(fmt::format("{}.free: {}", where, e.what()));
      }
      if (!slot.is_number_integer()) throw ParseError(fmt::format("{}.free.{}: expected an integer slot", where, name));
      ins.free |= mask_of(f);
      ins.slots[static_cast<std::size_t>(field_index(f))] = slot.get<int>();
    }
  }
  return ins;
}

}  // namespace

std::string_view to_string(InstructionKind k) {
  switch (k) {
    case InstructionKind::kPlaySqp: return "play_sqp";
    case InstructionKind::kPlayCr: return "play_cr";
    case InstructionKind::kDelay: return "delay";
  }
  return "?";
}

InstructionKind instruction_kind_from_string(std::string_view name) {
  if (name == "play_sqp") return InstructionKind::kPlaySqp;
  if (name == "play_cr") return InstructionKind::kPlayCr;
  if (name == "delay") return InstructionKind::kDelay;
  throw FormatError(fmt::format("unknown instruction kind \"{}\"", name));
}

std::vector<int> Channel::qubits() const {
  if (type == ChannelType::kDrive) return {control};
  return {control, target};
}

std::string to_string(const Channel& c) {
  if (c.type == ChannelType::kDrive) return fmt::format("d{}", c.control);
  return fmt::format("u{}_{}", c.control, c.target);
}

int Instruction::slot(ParamField f) const { return slots[static_cast<std::size_t>(field_index(f))]; }

void check_schedule(const Schedule& s) {
  if (s.n_qubits < 1) throw DomainError(fmt::format("schedule has {} qubits", s.n_qubits));
  std::map<Channel, std::vector<std::pair<std::int64_t, std::int64_t>>> busy;
  for (std::size_t i = 0; i < s.instructions.size(); ++i) {
    const Instruction& ins = s.instructions[i];
    for (int q : ins.channel.qubits()) {
      if (q < 0 || q >= s.n_qubits) {
        throw IndexError(fmt::format("instruction {}: qubit {} outside [0, {})", i, q, s.n_qubits));
      }
    }
    if (ins.channel.type == ChannelType::kControl && ins.channel.control == ins.channel.target) {
      throw IndexError(fmt::format("instruction {}: control and target coincide", i));
    }
    if (ins.start < 0) throw DomainError(fmt::format("instruction {}: negative start {}", i, ins.start));
    if (ins.params.duration < 0) {
      throw DomainError(fmt::format("instruction {}: negative duration {}", i, ins.params.duration));
    }
    busy[ins.channel].emplace_back(ins.start, ins.end());
  }
  for (auto& [channel, spans] : busy) {
    std::sort(spans.begin(), spans.end());
    for (std::size_t k = 1; k < spans.size(); ++k) {
      if (spans[k].first < spans[k - 1].second) {
        throw DomainError(fmt::format("channel {}: instructions overlap at t={}", to_string(channel), spans[k].first));
      }
    }
  }
}

void check_topology(const Schedule& s, const DeviceModel& d) {
  if (s.n_qubits > d.n_qubits) {
    throw TopologyError(fmt::format("schedule uses {} qubits, device \"{}\" has {}", s.n_qubits, d.name, d.n_qubits));
  }
  for (std::size_t i = 0; i < s.instructions.size(); ++i) {
    const Instruction& ins = s.instructions[i];
    if (ins.kind != InstructionKind::kPlayCr) continue;
    if (d.find_edge(ins.channel.control, ins.channel.target) == nullptr) {
      throw TopologyError(fmt::format("instruction {}: no CR coupling {} -> {} on device \"{}\"", i,
                                      ins.channel.control, ins.channel.target, d.name));
    }
  }
}

std::int64_t schedule_duration(const Schedule& s) {
  std::int64_t end = 0;
  for (const auto& ins : s.instructions) end = std::max(end, ins.end());
  return end;
}

std::vector<std::size_t> execution_order(const Schedule& s) {
  std::vector<std::size_t> order(s.instructions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&s](std::size_t a, std::size_t b) {
    const auto& ia = s.instructions[a];
    const auto& ib = s.instructions[b];
    if (ia.start != ib.start) return ia.start < ib.start;
    return ia.channel < ib.channel;
  });
  return order;
}

StructuralCounts structural_counts(const Schedule& s) {
  StructuralCounts c;
  std::set<int> slots;
  for (const auto& ins : s.instructions) {
    if (ins.kind == InstructionKind::kPlayCr) ++c.n_cr;
    if (ins.kind == InstructionKind::kPlaySqp) ++c.n_sqp;
    for (ParamField f : kFieldOrder) {
      if (has_field(ins.free, f) && ins.slot(f) >= 0) slots.insert(ins.slot(f));
    }
  }
  c.n_params = static_cast<int>(slots.size());
  return c;
}

std::string serialize_schedule(const Schedule& s) {
  json j;
  j["version"] = kScheduleVersion;
  j["n_qubits"] = s.n_qubits;
  json list = json::array();
  for (const auto& ins : s.instructions) list.push_back(instruction_json(ins));
  j["instructions"] = list;
  j["metadata"] = s.metadata;
  return j.dump(2) + "\n";
}

Schedule deserialize_schedule(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("schedule: {}", e.what()));
  }
  if (!j.is_object()) throw ParseError("schedule: top level must be an object");
  const std::int64_t version = require_integer(j, "version", "schedule");
  if (version != kScheduleVersion) {
    throw ParseError(fmt::format("schedule.version: unsupported version {}", version));
  }
  Schedule s;
  s.n_qubits = static_cast<int>(require_integer(j, "n_qubits", "schedule"));
  const json& list = require(j, "instructions", "schedule");
  if (!list.is_array()) throw ParseError("schedule.instructions: expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    s.instructions.push_back(parse_instruction(list[i], fmt::format("instructions[{}]", i)));
  }
  if (j.contains("metadata")) s.metadata = j["metadata"];
  try {
    check_schedule(s);
  } catch (const Error& e) {
    throw ParseError(fmt::format("schedule: {}", e.what()));
  }
  return s;
}

Schedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open schedule file {}", path));
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return deserialize_schedule(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace pulseforge::pulse
