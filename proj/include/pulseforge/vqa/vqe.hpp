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
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/common/rng.hpp"
#include "pulseforge/templates/ansatz.hpp"
#include "pulseforge/vqa/hamiltonian.hpp"
#include "pulseforge/vqa/optimizer.hpp"

namespace pulseforge::vqa {

// Starting point with weak drives: amplitudes from the lower third of their
// magnitude range (symmetric about 0 when the range contains 0), angles and
// durations as in sample_parameters.
std::vector<double> small_rotation_start(const templates::ParameterLayout& layout, StreamRng& rng);

struct VqeOptions {
  OptimizerConfig optimizer;
  int restarts = 1;
};

struct VqeResult {
  std::string template_name;
  int n_params = 0;
  VQETrace trace;                     // best restart
  std::vector<double> restart_energies;
  double exact_energy = 0.0;
  double gap = 0.0;                   // best_energy - exact_energy
  std::int64_t duration_dt = 0;       // ansatz duration at best_theta
};

// Minimizes <psi(theta)|H|psi(theta)>. Restart r starts from
// small_rotation_start with StreamRng(seed, r). Throws DimensionError when the
// qubit counts differ.
VqeResult vqe(const PauliHamiltonian& h, const templates::Ansatz& ansatz, const VqeOptions& options);

nlohmann::json to_json(const VqeResult& r);

}  // namespace pulseforge::vqa
