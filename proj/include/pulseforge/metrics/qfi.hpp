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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pulseforge/templates/ansatz.hpp"

namespace pulseforge::metrics {

struct QFIMatrix {
  Eigen::MatrixXd entries;
  double epsilon = 1e-3;
  double epsilon_duration = 8.0;
};

struct QfiOptions {
  double epsilon = 1e-3;           // amplitudes and angles
  double epsilon_duration = 8.0;   // durations, in dt, off the grid
};

// F_ij = Re(<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>) with central
// differences. Non-periodic coordinates must sit at least one step inside their
// range; otherwise a DomainError names the coordinate.
QFIMatrix qfi_matrix(const templates::Ansatz& ansatz, std::span<const double> theta, const QfiOptions& opt = {});

// Number of singular values above rel_tol * sigma_max; 0 when sigma_max < 1e-12.
int epd(const QFIMatrix& qfi, double rel_tol = 1e-6);

// Rank of the derivative of U(theta) with the global-phase direction removed.
// Bounded by 4^n - 1.
int unitary_epd(const templates::Ansatz& ansatz, std::span<const double> theta, const QfiOptions& opt = {},
                double rel_tol = 1e-6);

struct EpdResult {
  int epd = 0;                 // median over the points
  std::vector<int> per_point;
};

// EPD at n_points random interior parameter vectors; point k uses
// StreamRng(seed, k).
EpdResult median_epd(const templates::Ansatz& ansatz, std::size_t n_points = 5, std::uint64_t seed = 0,
                     const QfiOptions& opt = {});
EpdResult median_unitary_epd(const templates::Ansatz& ansatz, std::size_t n_points = 5, std::uint64_t seed = 0,
                             const QfiOptions& opt = {});

}  // namespace pulseforge::metrics
