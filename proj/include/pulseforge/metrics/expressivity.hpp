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
#include <vector>

#include "pulseforge/templates/ansatz.hpp"

namespace pulseforge::metrics {

struct FidelityHistogram {
  std::vector<std::uint64_t> counts;
  std::uint64_t n_samples = 0;

  std::size_t bins() const { return counts.size(); }
  double lower_edge(std::size_t b) const { return static_cast<double>(b) / static_cast<double>(bins()); }
  double upper_edge(std::size_t b) const { return static_cast<double>(b + 1) / static_cast<double>(bins()); }
  std::vector<double> frequencies() const;
};

// Bins fidelities on uniform bins over [0, 1]; F = 1 lands in the last bin.
FidelityHistogram histogram_of(const std::vector<double>& fidelities, std::size_t bins);

// Fidelities |<psi(a)|psi(b)>|^2 between independently sampled parameter
// pairs. Sample i draws from StreamRng(seed, i), so the result does not depend
// on the worker count.
std::vector<double> sample_fidelities(const templates::Ansatz& ansatz, std::size_t n_samples, std::uint64_t seed);

FidelityHistogram fidelity_histogram(const templates::Ansatz& ansatz, std::size_t n_samples = 5000,
                                     std::size_t bins = 50, std::uint64_t seed = 0);

// Haar reference for the histogram bins in Hilbert-space dimension 2^n.
std::vector<double> haar_reference(std::size_t bins, int n_qubits);

// KL divergence of the histogram frequencies from the Haar bin masses.
double expressivity(const FidelityHistogram& h, int n_qubits);
double expressivity(const templates::Ansatz& ansatz, std::size_t n_samples = 5000, std::size_t bins = 50,
                    std::uint64_t seed = 0);

}  // namespace pulseforge::metrics
