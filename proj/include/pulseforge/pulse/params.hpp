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
#include <string>
#include <string_view>
#include <vector>

namespace pulseforge::pulse {

// Tunable fields of a pulse. Used both as a single value and as a bit mask.
enum class ParamField : std::uint8_t { kAmplitude = 1, kAngle = 2, kDuration = 4 };

using FieldMask = std::uint8_t;
inline constexpr FieldMask kNoFields = 0;
inline constexpr FieldMask kAllFields = 7;

constexpr FieldMask mask_of(ParamField f) { return static_cast<FieldMask>(f); }
constexpr bool has_field(FieldMask m, ParamField f) { return (m & mask_of(f)) != 0; }

// Fields in layout order: amplitude, angle, duration.
inline constexpr ParamField kFieldOrder[] = {ParamField::kAmplitude, ParamField::kAngle,
                                             ParamField::kDuration};

std::string_view to_string(ParamField f);
ParamField param_field_from_string(std::string_view name);

struct PulseParams {
  double amplitude = 0.0;        // fraction of full-scale AWG output
  double angle = 0.0;            // drive phase, radians in [0, 2pi)
  std::int64_t duration = 0;     // dt ticks
  double frequency_offset = 0.0;  // Hz; metadata only

  bool operator==(const PulseParams&) const = default;
};

// Maps any finite angle into [0, 2pi).
double normalize_angle(double angle);

// Parameter ranges the hardware (or a chosen backend) accepts.
struct ConstraintSpec {
  std::string backend = "default";
  double amplitude_lo = -1.0;
  double amplitude_hi = 1.0;
  std::int64_t duration_lo = 256;
  std::int64_t duration_hi = 1024;
  std::int64_t duration_granularity = 16;

  bool operator==(const ConstraintSpec&) const = default;
};

// Amplitude lookup table by backend name. Unknown names fall back to the full
// [-1, 1] AWG range. Duration rules are backend independent.
ConstraintSpec constraint_spec_for(std::string_view backend_name);

enum class Violation { kAmplitudeOutOfRange, kDurationGranularity, kDurationOutOfRange, kNonFinite };

std::string_view to_string(Violation v);

struct FieldViolation {
  Violation kind;
  std::string message;
};

struct ValidationResult {
  std::vector<FieldViolation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Violation v) const;
  // One line per violation, "<kind>: <message>".
  std::string to_string() const;
};

// Checks p against c. Fields in `checked` are held to the full spec; fields
// outside it (calibrated or template-fixed values) only have to satisfy the
// hardware rules: |amplitude| <= 1 and duration a non-negative multiple of the
// granularity.
ValidationResult validate_params(const PulseParams& p, const ConstraintSpec& c,
                                 FieldMask checked = kAllFields);

}  // namespace pulseforge::pulse
