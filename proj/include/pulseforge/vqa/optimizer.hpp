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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/common/error.hpp"
#include "pulseforge/templates/ansatz.hpp"

namespace pulseforge::vqa {

enum class OptimizerMethod { kSpsa, kNelderMead };

std::string_view to_string(OptimizerMethod m);
OptimizerMethod optimizer_method_from_string(std::string_view name);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::kSpsa;
  int max_iterations = 300;
  // SPSA gains: a_k = a / (k + 1 + A)^alpha, c_k = c / (k + 1)^gamma.
  double a = 0.2;
  double c = 0.1;
  double stability = 10.0;  // A
  double alpha = 0.602;
  double gamma = 0.101;
  // Reject SPSA steps that raise the objective.
  bool blocking = false;
  // Nelder-Mead: initial simplex edge in optimizer units and stopping spread
  // in objective units.
  double simplex_step = 0.5;
  double tolerance = 1e-12;
  std::uint64_t seed = 0;

  // Throws DomainError for non-positive gains or max_iterations < 1.
  void validate() const;
};

// Search box. Periodic coordinates wrap instead of clamping. scale is the
// length of one optimizer unit along each coordinate.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<bool> periodic;
  std::vector<double> scale;

  std::size_t size() const { return lo.size(); }
  static Box from_layout(const templates::ParameterLayout& layout);
};

struct TraceEntry {
  int step = 0;
  std::uint64_t theta_hash = 0;
  double energy = 0.0;
};

struct VQETrace {
  std::vector<TraceEntry> iterations;
  double best_energy = 0.0;
  std::vector<double> best_theta;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;

  std::string to_csv() const;  // step,energy
  nlohmann::json summary() const;
};

// FNV-1a over the IEEE-754 bytes of theta.
std::uint64_t theta_hash(std::span<const double> theta);

// Raised when the objective returns NaN or infinity; carries the trace so far.
class NonFiniteObjective : public Error {
 public:
  NonFiniteObjective(const std::string& what, VQETrace trace) : Error(what), trace_(std::move(trace)) {}
  const VQETrace& trace() const { return trace_; }

 private:
  VQETrace trace_;
};

using Objective = std::function<double(std::span<const double>)>;

// Minimizes f over the box starting from theta0. Both methods work on
// u = (theta - lo) / scale. Every iteration records the
// objective at the current iterate; best_energy is the minimum of those.
VQETrace optimize(const Objective& f, std::span<const double> theta0, const Box& box, const OptimizerConfig& config);

}  // namespace pulseforge::vqa
