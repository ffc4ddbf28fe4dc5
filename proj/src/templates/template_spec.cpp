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

#include "pulseforge/templates/template_spec.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/rng.hpp"

namespace pulseforge::templates {
namespace {

using pulse::FieldMask;
using pulse::InstructionKind;
using pulse::ParamField;
using pulse::mask_of;

constexpr FieldMask kAmpAngle = mask_of(ParamField::kAmplitude) | mask_of(ParamField::kAngle);
constexpr FieldMask kAmpAngleDur = pulse::kAllFields;
constexpr FieldMask kAngleDur = mask_of(ParamField::kAngle) | mask_of(ParamField::kDuration);

struct Suffix {
  std::string_view text;
  FixedField field;
};
constexpr Suffix kSuffixes[] = {
    {"_fixamp", FixedField::kCrAmplitude},
    {"_fixang", FixedField::kCrAngle},
    {"_fixdur", FixedField::kCrDuration},
    {"_fixduration", FixedField::kCrDuration},
};

FieldMask apply_pins(InstructionKind kind, FieldMask free, FixedMask fixed) {
  const bool cr = kind == InstructionKind::kPlayCr;
  auto drop = [&](FixedField f, ParamField p) {
    if (fixed & fixed_mask(f)) free = static_cast<FieldMask>(free & ~mask_of(p));
  };
  if (cr) {
    drop(FixedField::kCrAmplitude, ParamField::kAmplitude);
    drop(FixedField::kCrAngle, ParamField::kAngle);
    drop(FixedField::kCrDuration, ParamField::kDuration);
  } else {
    drop(FixedField::kSqpAmplitude, ParamField::kAmplitude);
    drop(FixedField::kSqpAngle, ParamField::kAngle);
    drop(FixedField::kSqpDuration, ParamField::kDuration);
  }
  return free;
}

void require_qubits(const TemplateSpec& spec, int lo, int hi) {
  const int n = spec.n_qubits;
  if (n >= lo && n <= hi) return;
  if (lo == hi) throw TemplateError(fmt::format("{} needs exactly {} qubits, got {}", to_string(spec.id), lo, n));
  throw TemplateError(fmt::format("{} needs between {} and {} qubits, got {}", to_string(spec.id), lo, hi, n));
}

TemplateOp sqp(int q, FieldMask free) { return {InstructionKind::kPlaySqp, q, -1, free}; }
TemplateOp cr(int c, int t, FieldMask free) { return {InstructionKind::kPlayCr, c, t, free}; }

// Dressed-CR blocks chained along the line; neighbouring blocks share the
// dressing pulse on their common qubit.
void block_layer(std::vector<TemplateOp>& ops, int n, FieldMask sqp_free, FieldMask cr_free) {
  ops.push_back(sqp(0, sqp_free));
  ops.push_back(sqp(1, sqp_free));
  ops.push_back(cr(0, 1, cr_free));
  ops.push_back(sqp(0, sqp_free));
  ops.push_back(sqp(1, sqp_free));
  for (int k = 1; k + 1 < n; ++k) {
    ops.push_back(sqp(k + 1, sqp_free));
    ops.push_back(cr(k, k + 1, cr_free));
    ops.push_back(sqp(k, sqp_free));
    ops.push_back(sqp(k + 1, sqp_free));
  }
}

int formula_params(int id, int n, int l) {
  switch (id) {
    case 1: return (5 * n - 3) * l;
    case 2: return 2 * (2 * n - 1) * l;
    case 3: return (6 * n - 3) * l;
    case 4: return (5 * n - 2) * l;
    case 5: return (9 * n - 7) * l;
    case 6: return (8 * n - 6) * l;
    default: break;
  }
  throw TemplateError(fmt::format("no parameter formula for id {}", id));
}

std::vector<TemplateOp> random_ops(const TemplateSpec& spec) {
  const int match = static_cast<int>(matched_id(spec.id));
  const int n = spec.n_qubits;
  const int l = spec.n_layers;
  const FieldMask cr_free = (match % 2 == 0) ? kAngleDur : kAmpAngleDur;
  const int cr_arity = std::popcount(static_cast<unsigned>(cr_free));
  const int n_cr = (n - 1) * l;
  const int budget = formula_params(match, n, l) - n_cr * cr_arity;

  // Every split of the SQP budget into 2- and 3-parameter pulses.
  std::vector<int> three_counts;
  for (int b = 0; 3 * b <= budget; ++b) {
    if ((budget - 3 * b) % 2 == 0) three_counts.push_back(b);
  }
  if (three_counts.empty()) {
    throw TemplateError(fmt::format("cannot split a budget of {} parameters into 2/3-parameter pulses", budget));
  }

  StreamRng rng(spec.seed, 0x7261'6e64ULL);
  const int n_three = three_counts[rng.below(three_counts.size())];
  const int n_two = (budget - 3 * n_three) / 2;

  std::vector<TemplateOp> ops;
  for (int i = 0; i < n_cr; ++i) ops.push_back(cr(0, 1, cr_free));
  for (int i = 0; i < n_three; ++i) ops.push_back(sqp(0, kAmpAngleDur));
  for (int i = 0; i < n_two; ++i) ops.push_back(sqp(0, kAmpAngle));
  // Fisher-Yates with our own RNG so the order is library independent.
  for (std::size_t i = ops.size(); i > 1; --i) std::swap(ops[i - 1], ops[rng.below(i)]);
  for (auto& op : ops) {
    if (op.kind == InstructionKind::kPlayCr) {
      const int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      op.q0 = c;
      op.q1 = c + 1;
    } else {
      op.q0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    }
  }
  return ops;
}

}  // namespace

bool is_random(TemplateId id) {
  const int v = static_cast<int>(id);
  return v >= 7 && v <= 12;
}

TemplateId matched_id(TemplateId id) {
  return is_random(id) ? static_cast<TemplateId>(static_cast<int>(id) - 6) : id;
}

std::string_view to_string(TemplateId id) {
  switch (id) {
    case TemplateId::kHardwareEfficient: return "ID1";
    case TemplateId::kHardwareEfficientFixCr: return "ID2";
    case TemplateId::kDecay: return "ID3";
    case TemplateId::kDecayFixCr: return "ID4";
    case TemplateId::kBlock: return "ID5";
    case TemplateId::kBlockFixCr: return "ID6";
    case TemplateId::kRandom7: return "RAND7";
    case TemplateId::kRandom8: return "RAND8";
    case TemplateId::kRandom9: return "RAND9";
    case TemplateId::kRandom10: return "RAND10";
    case TemplateId::kRandom11: return "RAND11";
    case TemplateId::kRandom12: return "RAND12";
    case TemplateId::kDressed2Q: return "2QDressedpulse";
    case TemplateId::kBlockpulse2Q: return "2QBlockpulse";
    case TemplateId::kSingleQubitPulse: return "SQP";
  }
  return "?";
}

std::string TemplateSpec::name() const {
  std::string out(to_string(id));
  if (fixed & fixed_mask(FixedField::kCrAmplitude)) out += "_fixamp";
  if (fixed & fixed_mask(FixedField::kCrAngle)) out += "_fixang";
  if (fixed & fixed_mask(FixedField::kCrDuration)) out += "_fixduration";
  if (fixed & fixed_mask(FixedField::kSqpAmplitude)) out += "_fixsqpamp";
  if (fixed & fixed_mask(FixedField::kSqpAngle)) out += "_fixsqpang";
  if (fixed & fixed_mask(FixedField::kSqpDuration)) out += "_fixsqpdur";
  return out;
}

nlohmann::json TemplateSpec::to_json() const {
  nlohmann::json j;
  j["template"] = std::string(to_string(id));
  j["template_id"] = static_cast<int>(id);
  j["n_qubits"] = n_qubits;
  j["n_layers"] = n_layers;
  j["fixed_mask"] = fixed;
  if (is_random(id)) j["seed"] = seed;
  nlohmann::json v = nlohmann::json::object();
  if (values.cr_amplitude) v["cr_amplitude"] = *values.cr_amplitude;
  if (values.cr_angle) v["cr_angle"] = *values.cr_angle;
  if (values.cr_duration) v["cr_duration"] = *values.cr_duration;
  if (values.sqp_amplitude) v["sqp_amplitude"] = *values.sqp_amplitude;
  if (values.sqp_angle) v["sqp_angle"] = *values.sqp_angle;
  if (values.sqp_duration) v["sqp_duration"] = *values.sqp_duration;
  if (!v.empty()) j["fixed_values"] = v;
  return j;
}

TemplateSpec TemplateSpec::from_json(const nlohmann::json& j) {
  try {
    TemplateSpec s;
    const int id = j.at("template_id").get<int>();
    if (id < 1 || id > 15) throw TemplateError(fmt::format("unknown template id {}", id));
    s.id = static_cast<TemplateId>(id);
    s.n_qubits = j.at("n_qubits").get<int>();
    s.n_layers = j.at("n_layers").get<int>();
    s.fixed = j.value("fixed_mask", FixedMask{0});
    s.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("fixed_values")) {
      const auto& v = j["fixed_values"];
      if (v.contains("cr_amplitude")) s.values.cr_amplitude = v["cr_amplitude"].get<double>();
      if (v.contains("cr_angle")) s.values.cr_angle = v["cr_angle"].get<double>();
      if (v.contains("cr_duration")) s.values.cr_duration = v["cr_duration"].get<std::int64_t>();
      if (v.contains("sqp_amplitude")) s.values.sqp_amplitude = v["sqp_amplitude"].get<double>();
      if (v.contains("sqp_angle")) s.values.sqp_angle = v["sqp_angle"].get<double>();
      if (v.contains("sqp_duration")) s.values.sqp_duration = v["sqp_duration"].get<std::int64_t>();
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("template spec: {}", e.what()));
  }
}

TemplateSpec parse_template_name(std::string_view raw, int n_qubits, int n_layers, std::uint64_t seed) {
  std::string name(raw);
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
  TemplateSpec spec;
  spec.n_qubits = n_qubits;
  spec.n_layers = n_layers;
  spec.seed = seed;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (const auto& s : kSuffixes) {
      if (name.size() > s.text.size() && name.ends_with(s.text)) {
        spec.fixed |= fixed_mask(s.field);
        name.resize(name.size() - s.text.size());
        stripped = true;
      }
    }
  }
  if (name.starts_with("id")) name = name.substr(2);
  if (name.starts_with("rand")) name = name.substr(4);
  if (name == "dressed2q" || name == "2qdressedpulse") {
    spec.id = TemplateId::kDressed2Q;
  } else if (name == "blockpulse2q" || name == "2qblockpulse") {
    spec.id = TemplateId::kBlockpulse2Q;
  } else if (name == "sqp") {
    spec.id = TemplateId::kSingleQubitPulse;
  } else {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(name, &used);
      if (used != name.size()) v = 0;
    } catch (const std::exception&) {
      v = 0;
    }
    if (v < 1 || v > 12) throw TemplateError(fmt::format("unknown template \"{}\"", raw));
    spec.id = static_cast<TemplateId>(v);
  }
  return spec;
}

std::vector<TemplateOp> template_ops(const TemplateSpec& spec) {
  if (spec.n_layers < 1) throw TemplateError(fmt::format("n_layers must be >= 1, got {}", spec.n_layers));
  std::vector<TemplateOp> ops;
  const TemplateId base = matched_id(spec.id);
  const bool fix_cr_amp = base == TemplateId::kHardwareEfficientFixCr || base == TemplateId::kDecayFixCr ||
                          base == TemplateId::kBlockFixCr;
  const FieldMask cr_free = fix_cr_amp ? kAngleDur : kAmpAngleDur;

  if (is_random(spec.id)) {
    require_qubits(spec, 2, 12);
    ops = random_ops(spec);
  } else {
    for (int layer = 0; layer < spec.n_layers; ++layer) {
      switch (spec.id) {
        case TemplateId::kHardwareEfficient:
        case TemplateId::kHardwareEfficientFixCr:
        case TemplateId::kDecay:
        case TemplateId::kDecayFixCr: {
          require_qubits(spec, 2, 12);
          const bool decay = spec.id == TemplateId::kDecay || spec.id == TemplateId::kDecayFixCr;
          for (int q = 0; q < spec.n_qubits; ++q) ops.push_back(sqp(q, decay ? kAmpAngleDur : kAmpAngle));
          for (int q = 0; q + 1 < spec.n_qubits; ++q) ops.push_back(cr(q, q + 1, cr_free));
          break;
        }
        case TemplateId::kBlock:
        case TemplateId::kBlockFixCr:
          require_qubits(spec, 2, 12);
          block_layer(ops, spec.n_qubits, kAmpAngle, cr_free);
          break;
        case TemplateId::kDressed2Q:
          require_qubits(spec, 2, 2);
          block_layer(ops, 2, kAmpAngle, kAmpAngleDur);
          break;
        case TemplateId::kBlockpulse2Q:
          require_qubits(spec, 2, 2);
          for (int k = 0; k < 2; ++k) {
            ops.push_back(sqp(0, kAmpAngle));
            ops.push_back(sqp(1, kAmpAngle));
            ops.push_back(cr(0, 1, kAmpAngleDur));
          }
          ops.push_back(sqp(0, kAmpAngle));
          ops.push_back(sqp(1, kAmpAngle));
          break;
        case TemplateId::kSingleQubitPulse:
          require_qubits(spec, 1, 1);
          ops.push_back(sqp(0, kAmpAngle));
          break;
        default:
          throw TemplateError(fmt::format("unhandled template id {}", static_cast<int>(spec.id)));
      }
    }
  }
  for (auto& op : ops) op.free = apply_pins(op.kind, op.free, spec.fixed);
  return ops;
}

int logical_depth(const std::vector<TemplateOp>& ops, int n_qubits) {
  std::vector<int> level(static_cast<std::size_t>(n_qubits), 0);
  int depth = 0;
  for (const auto& op : ops) {
    int d = level[static_cast<std::size_t>(op.q0)];
    if (op.q1 >= 0) d = std::max(d, level[static_cast<std::size_t>(op.q1)]);
    ++d;
    level[static_cast<std::size_t>(op.q0)] = d;
    if (op.q1 >= 0) level[static_cast<std::size_t>(op.q1)] = d;
    depth = std::max(depth, d);
  }
  return depth;
}

ParamCount param_count(TemplateId id, int n_qubits, int n_layers) {
  if (n_layers < 1) throw TemplateError(fmt::format("n_layers must be >= 1, got {}", n_layers));
  TemplateSpec spec;
  spec.id = id;
  spec.n_qubits = n_qubits;
  spec.n_layers = n_layers;
  ParamCount c;
  const int m = static_cast<int>(matched_id(id));
  if (m >= 1 && m <= 6) {
    if (n_qubits < 2) throw TemplateError(fmt::format("{} needs at least 2 qubits", to_string(id)));
    c.n_params = formula_params(m, n_qubits, n_layers);
    c.n_cr = (n_qubits - 1) * n_layers;
  } else if (id == TemplateId::kDressed2Q) {
    c.n_params = 11 * n_layers;
    c.n_cr = n_layers;
  } else if (id == TemplateId::kBlockpulse2Q) {
    c.n_params = 18 * n_layers;
    c.n_cr = 2 * n_layers;
  } else {
    c.n_params = 2 * n_layers;
    c.n_cr = 0;
  }
  c.depth = logical_depth(template_ops(spec), n_qubits);
  return c;
}

TemplateSpec random_pulse_template(int match_id, int n_qubits, int n_layers, std::uint64_t seed) {
  if (match_id < 1 || match_id > 6) throw TemplateError(fmt::format("random template match id {} not in 1..6", match_id));
  TemplateSpec spec;
  spec.id = static_cast<TemplateId>(match_id + 6);
  spec.n_qubits = n_qubits;
  spec.n_layers = n_layers;
  spec.seed = seed;
  return spec;
}

}  // namespace pulseforge::templates
