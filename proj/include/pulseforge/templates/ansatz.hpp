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
#include <cstdint>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/common/rng.hpp"
#include "pulseforge/pulse/device.hpp"
#include "pulseforge/pulse/params.hpp"
#include "pulseforge/pulse/schedule.hpp"
#include "pulseforge/qcore/state.hpp"
#include "pulseforge/templates/gates.hpp"
#include "pulseforge/templates/template_spec.hpp"

namespace pulseforge::templates {

// One entry of a flat parameter vector.
struct ParamDescriptor {
  int owner = -1;  // operation index inside the template or circuit
  pulse::ParamField field = pulse::ParamField::kAmplitude;
  double lo = 0.0;
  double hi = 0.0;
  std::int64_t granularity = 0;  // non-zero for durations
  bool periodic = false;         // angles wrap on [lo, hi)
  // Change that turns the state by about pi radians; optimizers step in
  // these units.
  double scale = std::numbers::pi;

  bool is_duration() const { return field == pulse::ParamField::kDuration; }
};

using ParameterLayout = std::vector<ParamDescriptor>;

struct ParameterVector {
  std::vector<double> values;
  ParameterLayout layout;

  std::size_t size() const { return values.size(); }
};

// Uniform draws: continuous fields on [lo, hi], durations over the grid
// multiples inside [lo, hi].
std::vector<double> sample_parameters(const ParameterLayout& layout, StreamRng& rng);

// Like sample_parameters, but every non-periodic coordinate keeps a distance of
// at least eps (eps_duration for durations) from its bounds.
std::vector<double> sample_interior(const ParameterLayout& layout, StreamRng& rng, double eps = 1e-3,
                                    double eps_duration = 8.0);

// Nearest grid multiple of value.
std::int64_t snap_duration(double value, std::int64_t granularity);

class Ansatz {
 public:
  virtual ~Ansatz() = default;

  virtual std::string name() const = 0;
  virtual int n_qubits() const = 0;
  virtual int n_two_qubit_ops() const = 0;

  const ParameterLayout& layout() const { return layout_; }
  std::size_t n_params() const { return layout_.size(); }

  // Output state from |0...0>. relaxed keeps durations off the grid.
  virtual qcore::StateVector prepare(std::span<const double> theta, bool relaxed = false) const = 0;
  virtual qcore::UnitaryMatrix unitary(std::span<const double> theta, bool relaxed = false) const = 0;

  virtual std::int64_t duration_dt(std::span<const double> theta) const = 0;
  // Shortest and longest duration over the parameter box.
  virtual std::pair<std::int64_t, std::int64_t> duration_range() const = 0;

  virtual nlohmann::json describe() const = 0;

  ParameterVector sample(StreamRng& rng) const { return {sample_parameters(layout_, rng), layout_}; }

 protected:
  ParameterLayout layout_;
};

class PulseAnsatz final : public Ansatz {
 public:
  PulseAnsatz(TemplateSpec spec, pulse::DeviceModel device, pulse::ConstraintSpec constraints);

  std::string name() const override { return spec_.name(); }
  int n_qubits() const override { return spec_.n_qubits; }
  int n_two_qubit_ops() const override { return n_cr_; }

  // Snaps durations, wraps angles, validates the free fields and places the
  // operations as soon as their qubits are free. Throws DimensionError on a
  // length mismatch and ConstraintError on a violation.
  pulse::Schedule instantiate(std::span<const double> theta, bool relaxed = false) const;

  qcore::StateVector prepare(std::span<const double> theta, bool relaxed = false) const override;
  qcore::UnitaryMatrix unitary(std::span<const double> theta, bool relaxed = false) const override;
  std::int64_t duration_dt(std::span<const double> theta) const override;
  std::pair<std::int64_t, std::int64_t> duration_range() const override;
  nlohmann::json describe() const override;

  const TemplateSpec& spec() const { return spec_; }
  const std::vector<TemplateOp>& ops() const { return ops_; }
  const pulse::DeviceModel& device() const { return device_; }
  const pulse::ConstraintSpec& constraints() const { return constraints_; }

 private:
  TemplateSpec spec_;
  pulse::DeviceModel device_;
  pulse::ConstraintSpec constraints_;
  std::vector<TemplateOp> ops_;
  std::vector<std::array<int, 3>> slots_;
  std::vector<pulse::Channel> channels_;
  int n_cr_ = 0;
};

class GateAnsatz final : public Ansatz {
 public:
  GateAnsatz(GateBaseline baseline, int n_qubits, int reps, pulse::DeviceModel device);

  std::string name() const override { return std::string(to_string(baseline_)); }
  int n_qubits() const override { return circuit_.n_qubits; }
  int n_two_qubit_ops() const override;

  qcore::StateVector prepare(std::span<const double> theta, bool relaxed = false) const override;
  qcore::UnitaryMatrix unitary(std::span<const double> theta, bool relaxed = false) const override;
  std::int64_t duration_dt(std::span<const double>) const override { return duration_; }
  std::pair<std::int64_t, std::int64_t> duration_range() const override { return {duration_, duration_}; }
  nlohmann::json describe() const override;

  const GateCircuit& circuit() const { return circuit_; }

 private:
  GateBaseline baseline_;
  int reps_;
  GateCircuit circuit_;
  std::int64_t duration_ = 0;
};

// Builds a pulse template or gate baseline from a command-line name. For
// TWOLOCAL and REALAMP, n_layers is the repetition count.
std::unique_ptr<Ansatz> make_ansatz(std::string_view name, int n_qubits, int n_layers,
                                    const pulse::DeviceModel& device, const pulse::ConstraintSpec& constraints,
                                    std::uint64_t seed = 0);

std::unique_ptr<Ansatz> make_ansatz(const TemplateSpec& spec, const pulse::DeviceModel& device,
                                    const pulse::ConstraintSpec& constraints);

pulse::Schedule instantiate(const TemplateSpec& spec, std::span<const double> theta,
                            const pulse::DeviceModel& device, const pulse::ConstraintSpec& constraints);
pulse::Schedule instantiate(const TemplateSpec& spec, std::span<const double> theta,
                            const pulse::DeviceModel& device);

}  // namespace pulseforge::templates
