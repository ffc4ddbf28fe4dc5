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

#include <string>
#include <string_view>
#include <vector>

#include "pulseforge/qcore/state.hpp"

namespace pulseforge::qcore {

// Tensor product of single-qubit Paulis. label[q] acts on qubit q (qubit 0 is
// the least-significant index bit). Characters outside {I,X,Y,Z} raise
// FormatError.
CMatrix pauli_operator(std::string_view label);

// P|psi> computed by bit flips and phases, without forming P.
StateVector apply_pauli(const StateVector& state, std::string_view label);

// <psi|P|psi>; the imaginary part vanishes for Hermitian P.
double pauli_expectation(const StateVector& state, std::string_view label);

struct PauliTerm {
  double coefficient = 0.0;
  std::string label;

  bool operator==(const PauliTerm&) const = default;
};

// Weighted sum of Pauli strings over n_qubits.
struct PauliHamiltonian {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  CMatrix dense() const;
  // Terms whose label is not all-identity.
  std::size_t non_identity_term_count() const;
};

// Smallest eigenvalue of the dense Hamiltonian. Throws CapacityError above
// kMaxDenseQubits.
double exact_ground_energy(const PauliHamiltonian& h);

}  // namespace pulseforge::qcore
