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
#include <string_view>
#include <vector>

namespace pulseforge::pulse {

enum class EnvelopeKind { kGaussian, kGaussianSquare };

std::string_view to_string(EnvelopeKind kind);
EnvelopeKind envelope_kind_from_string(std::string_view name);

// Dimensionless pulse envelope s(t), sampled at integer dt ticks.
//
// gaussian:        s(t) = exp(-(t - d/2)^2 / (2 sigma^2))
// gaussian_square: unit flat top on [rise_fall, d - 1 - rise_fall] with
//                  gaussian edges of width sigma outside it.
//
// drag_beta is carried for bookkeeping only; no leakage channel is simulated.
struct Envelope {
  EnvelopeKind kind = EnvelopeKind::kGaussian;
  double sigma = 40.0;
  double rise_fall = 0.0;
  double drag_beta = 0.0;

  static Envelope gaussian_for(std::int64_t duration, double drag_beta = 0.0);
  static Envelope gaussian_square(double sigma, double rise_fall);

  bool operator==(const Envelope&) const = default;
};

// Throws ShapeError when sigma <= 0, the duration is negative, or a
// gaussian_square pulse would need a negative flat top.
void check_envelope(const Envelope& e, std::int64_t duration);

double envelope_sample(const Envelope& e, std::int64_t duration, std::int64_t tick);

// s(0), ..., s(duration - 1).
std::vector<double> envelope_samples(const Envelope& e, std::int64_t duration);

// Sum of the samples at ticks 0..duration-1.
double envelope_area(const Envelope& e, std::int64_t duration);

}  // namespace pulseforge::pulse
