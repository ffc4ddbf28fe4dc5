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

#include "pulseforge/pulse/envelope.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::pulse {

std::string_view to_string(EnvelopeKind kind) {
  return kind == EnvelopeKind::kGaussian ? "gaussian" : "gaussian_square";
}

EnvelopeKind envelope_kind_from_string(std::string_view name) {
  if (name == "gaussian") return EnvelopeKind::kGaussian;
  if (name == "gaussian_square") return EnvelopeKind::kGaussianSquare;
  throw FormatError(fmt::format("unknown envelope kind \"{}\"", name));
}

Envelope Envelope::gaussian_for(std::int64_t duration, double drag_beta) {
  return Envelope{EnvelopeKind::kGaussian, static_cast<double>(duration) / 4.0, 0.0, drag_beta};
}

Envelope Envelope::gaussian_square(double sigma, double rise_fall) {
  return Envelope{EnvelopeKind::kGaussianSquare, sigma, rise_fall, 0.0};
}

void check_envelope(const Envelope& e, std::int64_t duration) {
  if (duration < 0) throw ShapeError(fmt::format("negative duration {}", duration));
  if (!(e.sigma > 0.0) || !std::isfinite(e.sigma)) {
    throw ShapeError(fmt::format("envelope sigma must be positive, got {}", e.sigma));
  }
  if (e.kind == EnvelopeKind::kGaussianSquare) {
    if (e.rise_fall < 0.0) throw ShapeError(fmt::format("negative rise_fall {}", e.rise_fall));
    if (duration > 0 && 2.0 * e.rise_fall > static_cast<double>(duration)) {
      throw ShapeError(fmt::format("gaussian_square flat top would be negative: 2*rise_fall={} > duration={}",
                                   2.0 * e.rise_fall, duration));
    }
  }
}

double envelope_sample(const Envelope& e, std::int64_t duration, std::int64_t tick) {
  const double t = static_cast<double>(tick);
  const double two_s2 = 2.0 * e.sigma * e.sigma;
  if (e.kind == EnvelopeKind::kGaussian) {
    const double x = t - static_cast<double>(duration) / 2.0;
    return std::exp(-x * x / two_s2);
  }
  const double top_begin = e.rise_fall;
  const double top_end = static_cast<double>(duration) - 1.0 - e.rise_fall;
  if (t < top_begin) {
    const double x = top_begin - t;
    return std::exp(-x * x / two_s2);
  }
  if (t > top_end) {
    const double x = t - top_end;
    return std::exp(-x * x / two_s2);
  }
  return 1.0;
}

std::vector<double> envelope_samples(const Envelope& e, std::int64_t duration) {
  check_envelope(e, duration);
  std::vector<double> out(static_cast<std::size_t>(duration));
  for (std::int64_t t = 0; t < duration; ++t) out[static_cast<std::size_t>(t)] = envelope_sample(e, duration, t);
  return out;
}

double envelope_area(const Envelope& e, std::int64_t duration) {
  check_envelope(e, duration);
  double area = 0.0;
  for (std::int64_t t = 0; t < duration; ++t) area += envelope_sample(e, duration, t);
  return area;
}

}  // namespace pulseforge::pulse
