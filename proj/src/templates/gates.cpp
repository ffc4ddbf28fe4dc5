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

#include "pulseforge/templates/gates.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::templates {
namespace {

using qcore::CMatrix;
using qcore::Complex;

constexpr std::array<std::pair<GateBaseline, std::string_view>, 8> kNames{{
    {GateBaseline::kRz, "RZ"},
    {GateBaseline::kRx, "RX"},
    {GateBaseline::kRxRz, "RXRZ"},
    {GateBaseline::kZyz, "ZYZ"},
    {GateBaseline::kRxCx2Q, "RXCX2Q"},
    {GateBaseline::kUniversal2Q, "UNIVERSAL2Q"},
    {GateBaseline::kTwoLocal, "TWOLOCAL"},
    {GateBaseline::kRealAmp, "REALAMP"},
}};

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
  return out;
}

class Builder {
 public:
  explicit Builder(int n) { c_.n_qubits = n; }

  void rot(std::string name, int q) { c_.gates.push_back({std::move(name), {q}, c_.n_params++}); }
  void fixed(std::string name, int a, int b) { c_.gates.push_back({std::move(name), {a, b}, -1}); }
  void u3(int q) {
    rot("rz", q);
    rot("ry", q);
    rot("rz", q);
  }
  GateCircuit done() { return std::move(c_); }

 private:
  GateCircuit c_;
};

void require(GateBaseline b, int n, int lo, int hi) {
  if (n >= lo && n <= hi) return;
  if (lo == hi) throw TemplateError(fmt::format("{} needs exactly {} qubits, got {}", to_string(b), lo, n));
  throw TemplateError(fmt::format("{} needs between {} and {} qubits, got {}", to_string(b), lo, hi, n));
}

}  // namespace

std::string_view to_string(GateBaseline b) {
  for (const auto& [k, name] : kNames) {
    if (k == b) return name;
  }
  return "?";
}

GateBaseline gate_baseline_from_string(std::string_view name) {
  const std::string u = upper(name);
  for (const auto& [k, n] : kNames) {
    if (n == u) return k;
  }
  throw TemplateError(fmt::format("unknown gate baseline \"{}\"", name));
}

bool is_gate_baseline_name(std::string_view name) {
  const std::string u = upper(name);
  return std::any_of(kNames.begin(), kNames.end(), [&](const auto& e) { return e.second == u; });
}

GateCircuit gate_circuit(GateBaseline b, int n, int reps) {
  Builder g(n);
  switch (b) {
    case GateBaseline::kRz:
    case GateBaseline::kRx:
      require(b, n, 1, qcore::kMaxDenseQubits);
      for (int q = 0; q < n; ++q) g.rot(b == GateBaseline::kRz ? "rz" : "rx", q);
      break;
    case GateBaseline::kRxRz:
      require(b, n, 1, qcore::kMaxDenseQubits);
      for (int q = 0; q < n; ++q) {
        g.rot("rx", q);
        g.rot("rz", q);
      }
      break;
    case GateBaseline::kZyz:
      require(b, n, 1, qcore::kMaxDenseQubits);
      for (int q = 0; q < n; ++q) g.u3(q);
      break;
    case GateBaseline::kRxCx2Q:
      require(b, n, 2, 2);
      g.rot("rx", 0);
      g.rot("rx", 1);
      g.fixed("cx", 0, 1);
      g.rot("rx", 0);
      g.rot("rx", 1);
      break;
    case GateBaseline::kUniversal2Q:
      require(b, n, 2, 2);
      g.u3(0);
      g.u3(1);
      g.fixed("cx", 1, 0);
      g.rot("rz", 0);
      g.rot("ry", 1);
      g.fixed("cx", 0, 1);
      g.rot("ry", 1);
      g.fixed("cx", 1, 0);
      g.u3(0);
      g.u3(1);
      break;
    case GateBaseline::kTwoLocal:
    case GateBaseline::kRealAmp:
      require(b, n, 2, qcore::kMaxDenseQubits);
      if (reps < 1) throw TemplateError(fmt::format("reps must be >= 1, got {}", reps));
      for (int r = 0; r < reps; ++r) {
        for (int q = 0; q < n; ++q) g.rot("ry", q);
        if (b == GateBaseline::kTwoLocal) {
          for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) g.fixed("cz", i, j);
          }
        } else {
          for (int i = n - 2; i >= 0; --i) g.fixed("cx", i, i + 1);
        }
      }
      for (int q = 0; q < n; ++q) g.rot("ry", q);
      break;
  }
  return g.done();
}

CMatrix gate_matrix(std::string_view name, double angle) {
  const Complex i(0.0, 1.0);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  CMatrix m;
  if (name == "rx") {
    m.resize(2, 2);
    m << c, -i * s, -i * s, c;
  } else if (name == "ry") {
    m.resize(2, 2);
    m << c, -s, s, c;
  } else if (name == "rz") {
    m.resize(2, 2);
    m << std::exp(-i * angle / 2.0), 0.0, 0.0, std::exp(i * angle / 2.0);
  } else if (name == "cx") {
    // Local qubit 0 (bit 0) is the control.
    m = CMatrix::Identity(4, 4);
    m(1, 1) = 0.0;
    m(3, 3) = 0.0;
    m(1, 3) = 1.0;
    m(3, 1) = 1.0;
  } else if (name == "cz") {
    m = CMatrix::Identity(4, 4);
    m(3, 3) = -1.0;
  } else {
    throw TemplateError(fmt::format("unknown gate \"{}\"", name));
  }
  return m;
}

std::int64_t circuit_duration(const GateCircuit& c, const pulse::DeviceModel& d) {
  std::vector<std::int64_t> free_at(static_cast<std::size_t>(c.n_qubits), 0);
  std::int64_t total = 0;
  for (const auto& g : c.gates) {
    std::int64_t start = 0;
    for (int q : g.qubits) start = std::max(start, free_at[static_cast<std::size_t>(q)]);
    const std::int64_t end = start + d.gate_duration(g.name);
    for (int q : g.qubits) free_at[static_cast<std::size_t>(q)] = end;
    total = std::max(total, end);
  }
  return total;
}

qcore::StateVector apply_circuit(const GateCircuit& c, std::span<const double> theta, qcore::StateVector state) {
  if (theta.size() != static_cast<std::size_t>(c.n_params)) {
    throw DimensionError(fmt::format("circuit takes {} parameters, got {}", c.n_params, theta.size()));
  }
  for (const auto& g : c.gates) {
    const double angle = g.slot >= 0 ? theta[static_cast<std::size_t>(g.slot)] : 0.0;
    state = qcore::apply_embedded_unitary(std::move(state), qcore::UnitaryMatrix(gate_matrix(g.name, angle)),
                                          g.qubits);
  }
  return state;
}

qcore::UnitaryMatrix circuit_unitary(const GateCircuit& c, std::span<const double> theta) {
  const auto dim = static_cast<Eigen::Index>(1) << c.n_qubits;
  CMatrix u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    auto out = apply_circuit(c, theta, qcore::StateVector::basis(c.n_qubits, static_cast<std::uint64_t>(col)));
    u.col(col) = out.amplitudes();
  }
  return qcore::UnitaryMatrix(std::move(u));
}

GateBaselineResult gate_baseline(std::string_view name, int n_qubits, std::span<const double> theta,
                                 const pulse::DeviceModel& d, int reps) {
  const GateCircuit c = gate_circuit(gate_baseline_from_string(name), n_qubits, reps);
  return {circuit_unitary(c, theta), circuit_duration(c, d), c.n_params};
}

}  // namespace pulseforge::templates
