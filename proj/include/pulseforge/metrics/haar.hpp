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
#include <span>

namespace pulseforge::metrics {

// Density of the fidelity between two Haar-random pure states in dimension
// dim: (dim - 1)(1 - F)^(dim - 2). Throws DomainError for dim < 2 or F outside
// [0, 1].
double haar_pdf(double fidelity, std::uint64_t dim);

// Integral of haar_pdf over [a, b]: (1 - a)^(dim - 1) - (1 - b)^(dim - 1).
double haar_bin_mass(double a, double b, std::uint64_t dim);

// sum_b p_b ln(p_b / q_b). Bins with p_b = 0 contribute nothing; q_b = 0 where
// p_b > 0 is a support error (DomainError).
double kl_divergence(std::span<const double> p, std::span<const double> q);

}  // namespace pulseforge::metrics
