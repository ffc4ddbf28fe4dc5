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

#include "pulseforge/metrics/entanglement.hpp"

#include <algorithm>
#include <vector>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/parallel.hpp"

namespace pulseforge::metrics {
namespace {

// Keeps the parameter draws independent of the expressivity streams.
constexpr std::uint64_t kStreamTag = std::uint64_t{0x454e54} << 40;

}  // namespace

double mw_q(const qcore::StateVector& state) {
  const int n = state.n_qubits();
  if (n < 2) throw DomainError(fmt::format("Q-measure needs at least 2 qubits, got {}", n));
  double total = 0.0;
  for (int k = 0; k < n; ++k) total += qcore::purity(qcore::partial_trace(state, k));
  const double q = 2.0 * (1.0 - total / n);
  return std::clamp(q, 0.0, 1.0);
}

EntanglementResult entanglement_capability(const templates::Ansatz& ansatz, std::size_t n_samples,
                                           std::uint64_t seed) {
  if (ansatz.n_qubits() < 2) {
    throw DomainError(fmt::format("entanglement capability is undefined for the single-qubit template {}",
                                  ansatz.name()));
  }
  std::vector<double> qs(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t i) {
    StreamRng rng(seed, kStreamTag | i);
    qs[i] = mw_q(ansatz.prepare(templates::sample_parameters(ansatz.layout(), rng)));
  });
  EntanglementResult r;
  r.n_samples = n_samples;
  double sum = 0.0;
  for (double q : qs) {
    sum += q;
    r.max_q = std::max(r.max_q, q);
  }
  r.mean_q = n_samples == 0 ? 0.0 : sum / static_cast<double>(n_samples);
  return r;
}

}  // namespace pulseforge::metrics
