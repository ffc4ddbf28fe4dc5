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

#include "pulseforge/metrics/expressivity.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/parallel.hpp"
#include "pulseforge/metrics/haar.hpp"

namespace pulseforge::metrics {

std::vector<double> FidelityHistogram::frequencies() const {
  std::vector<double> f(counts.size(), 0.0);
  if (n_samples == 0) return f;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    f[b] = static_cast<double>(counts[b]) / static_cast<double>(n_samples);
  }
  return f;
}

FidelityHistogram histogram_of(const std::vector<double>& fidelities, std::size_t bins) {
  if (bins == 0) throw DomainError("histogram needs at least one bin");
  FidelityHistogram h;
  h.counts.assign(bins, 0);
  h.n_samples = fidelities.size();
  for (double f : fidelities) {
    const double scaled = std::clamp(f, 0.0, 1.0) * static_cast<double>(bins);
    const auto b = std::min(static_cast<std::size_t>(scaled), bins - 1);
    ++h.counts[b];
  }
  return h;
}

std::vector<double> sample_fidelities(const templates::Ansatz& ansatz, std::size_t n_samples, std::uint64_t seed) {
  std::vector<double> out(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t i) {
    StreamRng rng(seed, i);
    const auto a = templates::sample_parameters(ansatz.layout(), rng);
    const auto b = templates::sample_parameters(ansatz.layout(), rng);
    out[i] = qcore::fidelity(ansatz.prepare(a), ansatz.prepare(b));
  });
  return out;
}

FidelityHistogram fidelity_histogram(const templates::Ansatz& ansatz, std::size_t n_samples, std::size_t bins,
                                     std::uint64_t seed) {
  return histogram_of(sample_fidelities(ansatz, n_samples, seed), bins);
}

std::vector<double> haar_reference(std::size_t bins, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 62) throw DomainError(fmt::format("unsupported qubit count {}", n_qubits));
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  std::vector<double> q(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    const double lo = static_cast<double>(b) / static_cast<double>(bins);
    const double hi = b + 1 == bins ? 1.0 : static_cast<double>(b + 1) / static_cast<double>(bins);
    q[b] = haar_bin_mass(lo, hi, dim);
  }
  return q;
}

double expressivity(const FidelityHistogram& h, int n_qubits) {
  if (h.n_samples == 0) throw DomainError("expressivity of an empty histogram");
  return kl_divergence(h.frequencies(), haar_reference(h.bins(), n_qubits));
}

double expressivity(const templates::Ansatz& ansatz, std::size_t n_samples, std::size_t bins, std::uint64_t seed) {
  return expressivity(fidelity_histogram(ansatz, n_samples, bins, seed), ansatz.n_qubits());
}

}  // namespace pulseforge::metrics
