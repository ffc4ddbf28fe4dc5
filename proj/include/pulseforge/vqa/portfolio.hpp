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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pulseforge/qcore/pauli.hpp"

namespace pulseforge::vqa {

// Choose assets x in {0,1}^n to minimize q x^T S x - mu^T x, optionally with
// the penalty lambda (1^T x - budget)^2.
struct PortfolioProblem {
  Eigen::VectorXd expected_returns;
  Eigen::MatrixXd covariance;
  double risk_factor = 0.5;
  std::optional<int> budget;
  double penalty = 1.0;
  std::uint64_t seed = 0;

  int n_assets() const { return static_cast<int>(expected_returns.size()); }
  // Throws DimensionError / DomainError on mismatched or asymmetric input.
  void validate() const;
  // Non-fatal issues, e.g. a covariance that is not positive semidefinite.
  std::vector<std::string> warnings() const;
};

PortfolioProblem parse_portfolio(std::string_view json_text);
PortfolioProblem load_portfolio(const std::string& path);

// Objective at the bitstring whose bit i is x_i.
double portfolio_objective(const PortfolioProblem& p, std::uint64_t bits);

struct BruteForceResult {
  double value = 0.0;
  std::uint64_t bits = 0;
};
BruteForceResult brute_force_minimum(const PortfolioProblem& p);

// Substitutes x_i = (1 - Z_i) / 2. The identity term is always present;
// other terms with zero coefficient are dropped.
qcore::PauliHamiltonian portfolio_to_ising(const PortfolioProblem& p);

}  // namespace pulseforge::vqa
