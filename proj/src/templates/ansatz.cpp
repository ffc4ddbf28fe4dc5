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

#include "pulseforge/templates/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/sim/propagate.hpp"

namespace pulseforge::templates {
namespace {

using pulse::FieldMask;
using pulse::InstructionKind;
using pulse::ParamField;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t grid_lo(const ParamDescriptor& p, double margin) {
  const auto g = static_cast<double>(p.granularity);
  return static_cast<std::int64_t>(std::ceil((p.lo + margin) / g));
}

std::int64_t grid_hi(const ParamDescriptor& p, double margin) {
  const auto g = static_cast<double>(p.granularity);
  return static_cast<std::int64_t>(std::floor((p.hi - margin) / g));
}

double draw(const ParamDescriptor& p, StreamRng& rng, double eps, double eps_duration) {
  if (p.is_duration() && p.granularity > 0) {
    const std::int64_t a = grid_lo(p, eps_duration);
    const std::int64_t b = grid_hi(p, eps_duration);
    if (b < a) throw DomainError(fmt::format("no duration grid point inside [{}, {}]", p.lo, p.hi));
    const auto k = a + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(b - a + 1)));
    return static_cast<double>(k * p.granularity);
  }
  const double m = p.periodic ? 0.0 : (p.is_duration() ? eps_duration : eps);
  if (p.hi - p.lo < 2.0 * m) throw DomainError(fmt::format("range [{}, {}] narrower than 2 * {}", p.lo, p.hi, m));
  return rng.uniform(p.lo + m, p.hi - m);
}

// Reference duration of an operation for unit estimates: its pinned value, or
// the middle of the allowed range.
std::int64_t reference_duration(const TemplateOp& op, const pulse::DeviceModel& d, const TemplateSpec& spec,
                                const pulse::ConstraintSpec& c) {
  if (pulse::has_field(op.free, ParamField::kDuration)) {
    const auto g = std::max<std::int64_t>(c.duration_granularity, 1);
    return (c.duration_lo + c.duration_hi) / (2 * g) * g;
  }
  if (op.kind == InstructionKind::kPlayCr) return spec.values.cr_duration.value_or(d.cr_duration);
  return spec.values.sqp_duration.value_or(d.cal_duration);
}

// Amplitude change worth half a turn (pi radians) at the reference duration,
// capped by the width of the amplitude range.
double amplitude_scale(const TemplateOp& op, const pulse::DeviceModel& d, const TemplateSpec& spec,
                       const pulse::ConstraintSpec& c) {
  const double width = c.amplitude_hi - c.amplitude_lo;
  const std::int64_t ref = reference_duration(op, d, spec, c);
  double per_unit = 0.0;  // radians per unit amplitude
  if (op.kind == InstructionKind::kPlayCr) {
    const auto* edge = d.find_coupling(op.q0, op.q1);
    if (edge != nullptr) {
      const auto env = pulse::Envelope::gaussian_square(d.cr_sigma, d.cr_rise_fall);
      const double area = ref >= 2 * static_cast<std::int64_t>(d.cr_rise_fall) ? pulse::envelope_area(env, ref) : 0.0;
      per_unit = 2.0 * std::hypot(edge->coefficients.a_x, edge->coefficients.a_y) * area;
    }
  } else if (ref > 0 && d.cal_amplitude != 0.0) {
    const double cal = pulse::envelope_area(pulse::Envelope::gaussian_for(d.cal_duration), d.cal_duration);
    per_unit = std::numbers::pi / std::abs(d.cal_amplitude) *
               pulse::envelope_area(pulse::Envelope::gaussian_for(ref), ref) / cal;
  }
  if (!(per_unit > 0.0) || !std::isfinite(per_unit)) return width;
  return std::min(std::numbers::pi / per_unit, width);
}

// Duration change worth half a turn at a typical amplitude, at least eight grid
// steps so that optimizer probes survive snapping.
double duration_scale(const TemplateOp& op, const pulse::DeviceModel& d, const TemplateSpec& spec,
                      const pulse::ConstraintSpec& c) {
  const double width = static_cast<double>(c.duration_hi - c.duration_lo);
  const double floor = static_cast<double>(8 * std::max<std::int64_t>(c.duration_granularity, 1));
  const bool cr = op.kind == InstructionKind::kPlayCr;
  double amp = 0.5 * std::max(std::abs(c.amplitude_lo), std::abs(c.amplitude_hi));
  if (!pulse::has_field(op.free, ParamField::kAmplitude)) {
    amp = cr ? spec.values.cr_amplitude.value_or(d.cr_amplitude) : spec.values.sqp_amplitude.value_or(d.cal_amplitude);
  }
  double per_dt = 0.0;  // radians per dt
  if (cr) {
    if (const auto* edge = d.find_coupling(op.q0, op.q1)) {
      per_dt = 2.0 * std::hypot(edge->coefficients.a_x, edge->coefficients.a_y) * std::abs(amp);
    }
  } else if (d.cal_amplitude != 0.0) {
    const std::int64_t ref = reference_duration(op, d, spec, c);
    const double cal = pulse::envelope_area(pulse::Envelope::gaussian_for(d.cal_duration), d.cal_duration);
    const double area = pulse::envelope_area(pulse::Envelope::gaussian_for(ref), ref);
    per_dt = std::numbers::pi * std::abs(amp / d.cal_amplitude) * area / (cal * static_cast<double>(ref));
  }
  if (!(per_dt > 0.0) || !std::isfinite(per_dt)) return width;
  return std::clamp(std::numbers::pi / per_dt, std::min(floor, width), width);
}

}  // namespace

std::vector<double> sample_parameters(const ParameterLayout& layout, StreamRng& rng) {
  std::vector<double> out;
  out.reserve(layout.size());
  for (const auto& p : layout) out.push_back(draw(p, rng, 0.0, 0.0));
  return out;
}

std::vector<double> sample_interior(const ParameterLayout& layout, StreamRng& rng, double eps, double eps_duration) {
  std::vector<double> out;
  out.reserve(layout.size());
  for (const auto& p : layout) out.push_back(draw(p, rng, eps, eps_duration));
  return out;
}

std::int64_t snap_duration(double value, std::int64_t granularity) {
  if (granularity <= 0) return std::llround(value);
  const auto g = static_cast<double>(granularity);
  return std::llround(value / g) * granularity;
}

// --- PulseAnsatz ----------------------------------------------------------

PulseAnsatz::PulseAnsatz(TemplateSpec spec, pulse::DeviceModel device, pulse::ConstraintSpec constraints)
    : spec_(std::move(spec)), device_(std::move(device)), constraints_(std::move(constraints)) {
  if (spec_.n_qubits > device_.n_qubits) {
    throw TopologyError(fmt::format("template needs {} qubits, device {} has {}", spec_.n_qubits, device_.name,
                                    device_.n_qubits));
  }
  ops_ = template_ops(spec_);
  slots_.reserve(ops_.size());
  channels_.reserve(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const auto& op = ops_[i];
    std::array<int, 3> slots{-1, -1, -1};
    for (std::size_t f = 0; f < 3; ++f) {
      const ParamField field = pulse::kFieldOrder[f];
      if (!pulse::has_field(op.free, field)) continue;
      ParamDescriptor d;
      d.owner = static_cast<int>(i);
      d.field = field;
      switch (field) {
        case ParamField::kAmplitude:
          d.lo = constraints_.amplitude_lo;
          d.hi = constraints_.amplitude_hi;
          d.scale = amplitude_scale(op, device_, spec_, constraints_);
          break;
        case ParamField::kAngle:
          d.lo = 0.0;
          d.hi = kTwoPi;
          d.periodic = true;
          break;
        case ParamField::kDuration:
          d.lo = static_cast<double>(constraints_.duration_lo);
          d.hi = static_cast<double>(constraints_.duration_hi);
          d.granularity = constraints_.duration_granularity;
          d.scale = duration_scale(op, device_, spec_, constraints_);
          break;
      }
      slots[f] = static_cast<int>(layout_.size());
      layout_.push_back(d);
    }
    slots_.push_back(slots);
    if (op.kind == InstructionKind::kPlayCr) {
      ++n_cr_;
      const auto* edge = device_.find_coupling(op.q0, op.q1);
      if (edge == nullptr) {
        throw TopologyError(fmt::format("qubits {} and {} are not coupled on {}", op.q0, op.q1, device_.name));
      }
      channels_.push_back(pulse::Channel::cr(edge->control, edge->target));
    } else {
      channels_.push_back(pulse::Channel::drive(op.q0));
    }
  }
}

pulse::Schedule PulseAnsatz::instantiate(std::span<const double> theta, bool relaxed) const {
  if (theta.size() != layout_.size()) {
    throw DimensionError(fmt::format("{} takes {} parameters, got {}", name(), layout_.size(), theta.size()));
  }
  pulse::Schedule s;
  s.n_qubits = spec_.n_qubits;
  s.instructions.reserve(ops_.size());
  std::vector<std::int64_t> free_at(static_cast<std::size_t>(spec_.n_qubits), 0);
  const auto& v = spec_.values;

  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const auto& op = ops_[i];
    const auto& slots = slots_[i];
    const bool cr = op.kind == InstructionKind::kPlayCr;
    pulse::Instruction ins;
    ins.kind = op.kind;
    ins.channel = channels_[i];
    ins.free = op.free;
    ins.slots = slots;

    auto& p = ins.params;
    p.amplitude = slots[0] >= 0 ? theta[static_cast<std::size_t>(slots[0])]
                                : (cr ? v.cr_amplitude.value_or(device_.cr_amplitude)
                                      : v.sqp_amplitude.value_or(device_.cal_amplitude));
    const double angle = slots[1] >= 0 ? theta[static_cast<std::size_t>(slots[1])]
                                       : (cr ? v.cr_angle.value_or(0.0) : v.sqp_angle.value_or(0.0));
    if (slots[2] >= 0) {
      const double raw = theta[static_cast<std::size_t>(slots[2])];
      if (!std::isfinite(raw)) {
        throw ConstraintError(fmt::format("{} op {}: non-finite duration", name(), i));
      }
      p.duration = relaxed ? std::llround(raw) : snap_duration(raw, constraints_.duration_granularity);
    } else {
      p.duration = cr ? v.cr_duration.value_or(device_.cr_duration) : v.sqp_duration.value_or(device_.cal_duration);
    }
    if (!std::isfinite(angle)) throw ConstraintError(fmt::format("{} op {}: non-finite angle", name(), i));
    p.angle = pulse::normalize_angle(angle);

    if (!relaxed) {
      const auto check = pulse::validate_params(p, constraints_, op.free);
      if (!check.ok()) {
        throw ConstraintError(fmt::format("{} op {} ({}): {}", name(), i, pulse::to_string(ins.channel),
                                          check.to_string()));
      }
    } else if (!std::isfinite(p.amplitude)) {
      throw ConstraintError(fmt::format("{} op {}: non-finite amplitude", name(), i));
    }

    ins.envelope = cr ? pulse::Envelope::gaussian_square(device_.cr_sigma, device_.cr_rise_fall)
                      : pulse::Envelope::gaussian_for(p.duration, device_.drag_beta);

    std::int64_t start = free_at[static_cast<std::size_t>(op.q0)];
    if (op.q1 >= 0) start = std::max(start, free_at[static_cast<std::size_t>(op.q1)]);
    ins.start = start;
    free_at[static_cast<std::size_t>(op.q0)] = ins.end();
    if (op.q1 >= 0) free_at[static_cast<std::size_t>(op.q1)] = ins.end();
    s.instructions.push_back(ins);
  }
  s.metadata = spec_.to_json();
  s.metadata["n_params"] = layout_.size();
  s.metadata["n_cr"] = n_cr_;
  return s;
}

qcore::StateVector PulseAnsatz::prepare(std::span<const double> theta, bool relaxed) const {
  sim::PropagationLevel level;
  level.relaxed_durations = relaxed;
  return sim::evolve_schedule(instantiate(theta, relaxed), device_, qcore::StateVector(spec_.n_qubits), level);
}

qcore::UnitaryMatrix PulseAnsatz::unitary(std::span<const double> theta, bool relaxed) const {
  sim::PropagationLevel level;
  level.relaxed_durations = relaxed;
  return sim::schedule_unitary(instantiate(theta, relaxed), device_, level);
}

std::int64_t PulseAnsatz::duration_dt(std::span<const double> theta) const {
  return pulse::schedule_duration(instantiate(theta));
}

std::pair<std::int64_t, std::int64_t> PulseAnsatz::duration_range() const {
  auto at = [&](bool longest) {
    std::vector<double> theta;
    theta.reserve(layout_.size());
    for (const auto& p : layout_) {
      if (p.is_duration()) {
        const auto g = std::max<std::int64_t>(p.granularity, 1);
        const auto k = longest ? static_cast<std::int64_t>(std::floor(p.hi / static_cast<double>(g)))
                               : static_cast<std::int64_t>(std::ceil(p.lo / static_cast<double>(g)));
        theta.push_back(static_cast<double>(k * g));
      } else {
        theta.push_back(std::clamp(0.0, p.lo, p.hi));
      }
    }
    return pulse::schedule_duration(instantiate(theta));
  };
  return {at(false), at(true)};
}

nlohmann::json PulseAnsatz::describe() const {
  nlohmann::json j = spec_.to_json();
  j["kind"] = "pulse";
  j["n_params"] = layout_.size();
  j["n_cr"] = n_cr_;
  j["backend"] = constraints_.backend;
  return j;
}

// --- GateAnsatz -----------------------------------------------------------

GateAnsatz::GateAnsatz(GateBaseline baseline, int n_qubits, int reps, pulse::DeviceModel device)
    : baseline_(baseline), reps_(reps), circuit_(gate_circuit(baseline, n_qubits, reps)) {
  duration_ = circuit_duration(circuit_, device);
  layout_.resize(static_cast<std::size_t>(circuit_.n_params));
  for (std::size_t g = 0; g < circuit_.gates.size(); ++g) {
    const auto& gate = circuit_.gates[g];
    if (gate.slot < 0) continue;
    auto& d = layout_[static_cast<std::size_t>(gate.slot)];
    d.owner = static_cast<int>(g);
    d.field = ParamField::kAngle;
    d.lo = 0.0;
    d.hi = kTwoPi;
    d.periodic = true;
  }
}

int GateAnsatz::n_two_qubit_ops() const {
  return static_cast<int>(std::count_if(circuit_.gates.begin(), circuit_.gates.end(),
                                        [](const Gate& g) { return g.qubits.size() == 2; }));
}

qcore::StateVector GateAnsatz::prepare(std::span<const double> theta, bool) const {
  return apply_circuit(circuit_, theta, qcore::StateVector(circuit_.n_qubits));
}

qcore::UnitaryMatrix GateAnsatz::unitary(std::span<const double> theta, bool) const {
  return circuit_unitary(circuit_, theta);
}

nlohmann::json GateAnsatz::describe() const {
  nlohmann::json j;
  j["kind"] = "gate";
  j["template"] = name();
  j["n_qubits"] = circuit_.n_qubits;
  j["n_params"] = circuit_.n_params;
  j["n_two_qubit_gates"] = n_two_qubit_ops();
  if (baseline_ == GateBaseline::kTwoLocal || baseline_ == GateBaseline::kRealAmp) j["reps"] = reps_;
  return j;
}

// --- factories ------------------------------------------------------------

std::unique_ptr<Ansatz> make_ansatz(std::string_view name, int n_qubits, int n_layers,
                                    const pulse::DeviceModel& device, const pulse::ConstraintSpec& constraints,
                                    std::uint64_t seed) {
  if (is_gate_baseline_name(name)) {
    return std::make_unique<GateAnsatz>(gate_baseline_from_string(name), n_qubits, n_layers, device);
  }
  return make_ansatz(parse_template_name(name, n_qubits, n_layers, seed), device, constraints);
}

std::unique_ptr<Ansatz> make_ansatz(const TemplateSpec& spec, const pulse::DeviceModel& device,
                                    const pulse::ConstraintSpec& constraints) {
  return std::make_unique<PulseAnsatz>(spec, device, constraints);
}

pulse::Schedule instantiate(const TemplateSpec& spec, std::span<const double> theta,
                            const pulse::DeviceModel& device, const pulse::ConstraintSpec& constraints) {
  return PulseAnsatz(spec, device, constraints).instantiate(theta);
}

pulse::Schedule instantiate(const TemplateSpec& spec, std::span<const double> theta,
                            const pulse::DeviceModel& device) {
  return instantiate(spec, theta, device, pulse::constraint_spec_for(device.backend));
}

}  // namespace pulseforge::templates
