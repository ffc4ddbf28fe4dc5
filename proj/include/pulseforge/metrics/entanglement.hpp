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

#include "pulseforge/qcore/state.hpp"
#include "pulseforge/templates/ansatz.hpp"

namespace pulseforge::metrics {

// Meyer-Wallach global entanglement Q = 2 (1 - mean single-qubit purity).
// Throws DomainError for single-qubit states.
double mw_q(const qcore::StateVector& state);

struct EntanglementResult {
  double mean_q = 0.0;
  double max_q = 0.0;
  std::size_t n_samples = 0;
};

// Q averaged over uniformly sampled parameter vectors.
EntanglementResult entanglement_capability(const templates::Ansatz& ansatz, std::size_t n_samples = 500,
                                           std::uint64_t seed = 0);

}  // namespace pulseforge::metrics
