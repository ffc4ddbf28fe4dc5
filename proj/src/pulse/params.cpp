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

#include "pulseforge/pulse/params.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::pulse {
namespace {

struct LutEntry {
  std::string_view backend;
  double lo;
  double hi;
};

// Measured amplitude windows giving a full Rabi cycle.
constexpr std::array<LutEntry, 1> kAmplitudeLut = {{
    {"ibmq_guadalupe", 0.1, 0.4},
}};

}  // namespace

std::string_view to_string(ParamField f) {
  switch (f) {
    case ParamField::kAmplitude: return "amplitude";
    case ParamField::kAngle: return "angle";
    case ParamField::kDuration: return "duration";
  }
  return "?";
}

ParamField param_field_from_string(std::string_view name) {
  for (ParamField f : kFieldOrder) {
    if (to_string(f) == name) return f;
  }
  throw FormatError(fmt::format("unknown pulse field \"{}\"", name));
}

double normalize_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

ConstraintSpec constraint_spec_for(std::string_view backend_name) {
  ConstraintSpec spec;
  spec.backend = std::string(backend_name);
  for (const auto& e : kAmplitudeLut) {
    if (e.backend == backend_name) {
      spec.amplitude_lo = e.lo;
      spec.amplitude_hi = e.hi;
      return spec;
    }
  }
  return spec;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kAmplitudeOutOfRange: return "amplitude-out-of-range";
    case Violation::kDurationGranularity: return "duration-granularity";
    case Violation::kDurationOutOfRange: return "duration-out-of-range";
    case Violation::kNonFinite: return "non-finite";
  }
  return "?";
}

bool ValidationResult::has(Violation v) const {
  for (const auto& fv : violations) {
    if (fv.kind == v) return true;
  }
  return false;
}

std::string ValidationResult::to_string() const {
  std::string out;
  for (const auto& fv : violations) {
    out += fmt::format("{}: {}\n", pulse::to_string(fv.kind), fv.message);
  }
  return out;
}

ValidationResult validate_params(const PulseParams& p, const ConstraintSpec& c, FieldMask checked) {
  ValidationResult r;
  auto add = [&r](Violation v, std::string msg) { r.violations.push_back({v, std::move(msg)}); };

  if (!std::isfinite(p.amplitude) || !std::isfinite(p.angle)) {
    add(Violation::kNonFinite, fmt::format("amplitude={} angle={}", p.amplitude, p.angle));
    return r;
  }

  const bool amp_free = has_field(checked, ParamField::kAmplitude);
  const double amp_lo = amp_free ? c.amplitude_lo : -1.0;
  const double amp_hi = amp_free ? c.amplitude_hi : 1.0;
  if (p.amplitude < amp_lo || p.amplitude > amp_hi) {
    add(Violation::kAmplitudeOutOfRange,
        fmt::format("amplitude {} outside [{}, {}] ({})", p.amplitude, amp_lo, amp_hi,
                    amp_free ? c.backend : "hardware limit"));
  }

  // The angle is periodic; normalising it always lands inside [0, 2pi).

  if (c.duration_granularity > 0 && p.duration % c.duration_granularity != 0) {
    add(Violation::kDurationGranularity,
        fmt::format("duration {} is not a multiple of {}", p.duration, c.duration_granularity));
  }
  if (has_field(checked, ParamField::kDuration)) {
    if (p.duration < c.duration_lo || p.duration > c.duration_hi) {
      add(Violation::kDurationOutOfRange,
          fmt::format("duration {} outside [{}, {}]", p.duration, c.duration_lo, c.duration_hi));
    }
  } else if (p.duration < 0) {
    add(Violation::kDurationOutOfRange, fmt::format("duration {} is negative", p.duration));
  }
  return r;
}

}  // namespace pulseforge::pulse
