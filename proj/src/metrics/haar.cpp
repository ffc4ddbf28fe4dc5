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

#include "pulseforge/metrics/haar.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::metrics {

double haar_pdf(double fidelity, std::uint64_t dim) {
  if (dim < 2) throw DomainError(fmt::format("Haar fidelity density needs dim >= 2, got {}", dim));
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw DomainError(fmt::format("fidelity {} outside [0, 1]", fidelity));
  const auto n = static_cast<double>(dim);
  return (n - 1.0) * std::pow(1.0 - fidelity, n - 2.0);
}

double haar_bin_mass(double a, double b, std::uint64_t dim) {
  if (dim < 2) throw DomainError(fmt::format("Haar fidelity density needs dim >= 2, got {}", dim));
  if (!(a >= 0.0 && a < b && b <= 1.0)) throw DomainError(fmt::format("invalid bin [{}, {}]", a, b));
  const auto e = static_cast<double>(dim - 1);
  return std::pow(1.0 - a, e) - std::pow(1.0 - b, e);
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw DimensionError(fmt::format("distributions have {} and {} bins", p.size(), q.size()));
  }
  double sum = 0.0;
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (p[b] < 0.0 || q[b] < 0.0) throw DomainError(fmt::format("negative probability in bin {}", b));
    if (p[b] == 0.0) continue;
    if (q[b] == 0.0) throw DomainError(fmt::format("support error: q is zero in bin {} where p = {}", b, p[b]));
    sum += p[b] * std::log(p[b] / q[b]);
  }
  // Rounding can leave a tiny negative value for p == q.
  return sum < 0.0 && sum > -1e-15 ? 0.0 : sum;
}

}  // namespace pulseforge::metrics
