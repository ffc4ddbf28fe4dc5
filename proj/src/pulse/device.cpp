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

#include "pulseforge/pulse/device.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pulseforge/common/error.hpp"

namespace pulseforge::pulse {
namespace {

using nlohmann::json;

constexpr CrCoefficients kDefaultCr{3.0e-3, 0.0, 2.0e-4, 1.0e-3, 0.0, 1.0e-4};

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("device field \"{}\": {}", key, e.what()));
  }
}

template <typename T>
T integer_field_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) {
    throw ParseError(fmt::format("device field \"{}\" must be an integer", key));
  }
  return j.at(key).get<T>();
}

CrCoefficients parse_coefficients(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 6) {
    throw ParseError(fmt::format("{}: cr_coefficients must be an array of 6 numbers", where));
  }
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(fmt::format("{}: cr_coefficients must be numeric", where));
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>(), j[4].get<double>(), j[5].get<double>()};
}

json coefficients_json(const CrCoefficients& c) {
  return json::array({c.a_x, c.a_y, c.a_z, c.b_x, c.b_y, c.b_z});
}

}  // namespace

const CouplingEdge* DeviceModel::find_edge(int control, int target) const {
  for (const auto& e : edges) {
    if (e.control == control && e.target == target) return &e;
  }
  return nullptr;
}

const CouplingEdge* DeviceModel::find_coupling(int a, int b) const {
  if (const auto* e = find_edge(a, b)) return e;
  return find_edge(b, a);
}

std::int64_t DeviceModel::gate_duration(std::string_view gate) const {
  const auto it = gate_durations.find(std::string(gate));
  if (it == gate_durations.end()) {
    throw FormatError(fmt::format("device \"{}\" has no duration for gate \"{}\"", name, gate));
  }
  return it->second;
}

void DeviceModel::validate() const {
  if (n_qubits < 1) throw ParseError(fmt::format("device n_qubits must be positive, got {}", n_qubits));
  if (!(dt_ns > 0.0)) throw ParseError(fmt::format("device dt_ns must be positive, got {}", dt_ns));
  if (cal_duration <= 0 || cal_duration % 16 != 0) {
    throw ParseError(fmt::format("device cal_duration {} must be a positive multiple of 16", cal_duration));
  }
  if (cal_amplitude == 0.0) throw ParseError("device cal_amplitude must be non-zero");
  if (cr_duration % 16 != 0) {
    throw ParseError(fmt::format("device cr_duration {} must be a multiple of 16", cr_duration));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.control < 0 || e.control >= n_qubits || e.target < 0 || e.target >= n_qubits ||
        e.control == e.target) {
      throw ParseError(fmt::format("edges[{}]: ({}, {}) is not a valid qubit pair", i, e.control, e.target));
    }
  }
}

std::map<std::string, std::int64_t> default_gate_durations() {
  return {{"rz", 0}, {"rx", 320}, {"ry", 320}, {"u3", 320}, {"cx", 1056}, {"cz", 1056}};
}

DeviceModel ideal_device(int n_qubits) {
  DeviceModel d;
  d.name = fmt::format("ideal-linear-{}", n_qubits);
  d.n_qubits = n_qubits;
  for (int q = 0; q + 1 < n_qubits; ++q) d.edges.push_back({q, q + 1, kDefaultCr});
  d.gate_durations = default_gate_durations();
  return d;
}

DeviceModel parse_device(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("device file: {}", e.what()));
  }
  if (!j.is_object()) throw ParseError("device file: top level must be an object");
  if (!j.contains("n_qubits")) throw ParseError("device file: missing field \"n_qubits\"");

  DeviceModel d;
  d.name = field_or<std::string>(j, "name", d.name);
  d.backend = field_or<std::string>(j, "backend", d.backend);
  d.n_qubits = integer_field_or<int>(j, "n_qubits", d.n_qubits);
  d.dt_ns = field_or<double>(j, "dt_ns", d.dt_ns);
  d.cal_amplitude = field_or<double>(j, "cal_amplitude", d.cal_amplitude);
  d.cal_duration = integer_field_or<std::int64_t>(j, "cal_duration", d.cal_duration);
  d.drag_beta = field_or<double>(j, "drag_beta", d.drag_beta);
  d.cr_amplitude = field_or<double>(j, "cr_amplitude", d.cr_amplitude);
  d.cr_duration = integer_field_or<std::int64_t>(j, "cr_duration", d.cr_duration);
  d.cr_rise_fall = field_or<double>(j, "cr_rise_fall", d.cr_rise_fall);
  d.cr_sigma = field_or<double>(j, "cr_sigma", d.cr_sigma);

  CrCoefficients fallback = kDefaultCr;
  if (j.contains("default_cr_coefficients")) {
    fallback = parse_coefficients(j["default_cr_coefficients"], "default_cr_coefficients");
  }
  if (j.contains("edges")) {
    const json& edges = j["edges"];
    if (!edges.is_array()) throw ParseError("device field \"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const json& e = edges[i];
      const std::string where = fmt::format("edges[{}]", i);
      if (!e.is_object()) throw ParseError(fmt::format("{}: must be an object", where));
      if (!e.contains("control") || !e.contains("target")) {
        throw ParseError(fmt::format("{}: missing control/target", where));
      }
      CouplingEdge edge;
      if (!e["control"].is_number_integer() || !e["target"].is_number_integer()) {
        throw ParseError(fmt::format("{}: control/target must be integers", where));
      }
      edge.control = e["control"].get<int>();
      edge.target = e["target"].get<int>();
      edge.coefficients =
          e.contains("cr_coefficients") ? parse_coefficients(e["cr_coefficients"], where) : fallback;
      d.edges.push_back(edge);
    }
  } else {
    for (int q = 0; q + 1 < d.n_qubits; ++q) d.edges.push_back({q, q + 1, fallback});
  }

  d.gate_durations = default_gate_durations();
  if (j.contains("single_gate_durations")) {
    for (const auto& [k, v] : j["single_gate_durations"].items()) {
      if (!v.is_number_integer()) {
        throw ParseError(fmt::format("single_gate_durations.{}: duration must be an integer", k));
      }
      d.gate_durations[k] = v.get<std::int64_t>();
    }
  }
  d.validate();
  return d;
}

std::string serialize_device(const DeviceModel& d) {
  json j;
  j["name"] = d.name;
  j["backend"] = d.backend;
  j["n_qubits"] = d.n_qubits;
  j["dt_ns"] = d.dt_ns;
  j["cal_amplitude"] = d.cal_amplitude;
  j["cal_duration"] = d.cal_duration;
  j["drag_beta"] = d.drag_beta;
  j["cr_amplitude"] = d.cr_amplitude;
  j["cr_duration"] = d.cr_duration;
  j["cr_rise_fall"] = d.cr_rise_fall;
  j["cr_sigma"] = d.cr_sigma;
  json edges = json::array();
  for (const auto& e : d.edges) {
    edges.push_back({{"control", e.control}, {"target", e.target},
                     {"cr_coefficients", coefficients_json(e.coefficients)}});
  }
  j["edges"] = edges;
  j["single_gate_durations"] = d.gate_durations;
  return j.dump(2) + "\n";
}

DeviceModel load_device(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open device file {}", path));
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_device(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace pulseforge::pulse
