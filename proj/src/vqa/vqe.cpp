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

#include "pulseforge/vqa/vqe.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::vqa {

std::vector<double> small_rotation_start(const templates::ParameterLayout& layout, StreamRng& rng) {
  auto theta = templates::sample_parameters(layout, rng);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& p = layout[i];
    if (p.field != pulse::ParamField::kAmplitude) continue;
    if (p.lo < 0.0 && p.hi > 0.0) {
      const double m = std::min(-p.lo, p.hi) / 3.0;
      theta[i] = rng.uniform(-m, m);
    } else {
      theta[i] = rng.uniform(p.lo, p.lo + (p.hi - p.lo) / 3.0);
    }
  }
  return theta;
}

VqeResult vqe(const PauliHamiltonian& h, const templates::Ansatz& ansatz, const VqeOptions& options) {
  if (h.n_qubits != ansatz.n_qubits()) {
    throw DimensionError(fmt::format("Hamiltonian acts on {} qubits, template {} on {}", h.n_qubits, ansatz.name(),
                                     ansatz.n_qubits()));
  }
  if (options.restarts < 1) throw DomainError(fmt::format("restarts must be >= 1, got {}", options.restarts));
  const Box box = Box::from_layout(ansatz.layout());
  const Objective f = [&](std::span<const double> theta) { return expectation(ansatz.prepare(theta), h); };

  VqeResult r;
  r.template_name = ansatz.name();
  r.n_params = static_cast<int>(ansatz.n_params());
  r.exact_energy = qcore::exact_ground_energy(h);
  for (int k = 0; k < options.restarts; ++k) {
    StreamRng rng(options.optimizer.seed, static_cast<std::uint64_t>(k));
    const auto theta0 = small_rotation_start(ansatz.layout(), rng);
    OptimizerConfig cfg = options.optimizer;
    cfg.seed = rng.next();
    VQETrace t = optimize(f, theta0, box, cfg);
    r.restart_energies.push_back(t.best_energy);
    if (k == 0 || t.best_energy < r.trace.best_energy) r.trace = std::move(t);
  }
  r.trace.seed = options.optimizer.seed;
  r.gap = r.trace.best_energy - r.exact_energy;
  r.duration_dt = ansatz.duration_dt(r.trace.best_theta);
  return r;
}

nlohmann::json to_json(const VqeResult& r) {
  nlohmann::json j = r.trace.summary();
  j["template"] = r.template_name;
  j["n_params"] = r.n_params;
  j["exact_energy"] = r.exact_energy;
  j["gap"] = r.gap;
  j["duration_dt"] = r.duration_dt;
  j["restart_energies"] = r.restart_energies;
  return j;
}

}  // namespace pulseforge::vqa
