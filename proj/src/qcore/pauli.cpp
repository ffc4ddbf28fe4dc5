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

#include "pulseforge/qcore/pauli.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::qcore {
namespace {

void check_label(std::string_view label) {
  if (label.empty()) throw FormatError("empty Pauli label");
  for (std::size_t i = 0; i < label.size(); ++i) {
    const char c = label[i];
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw FormatError(fmt::format("invalid Pauli character '{}' at position {} of \"{}\"", c, i, label));
    }
  }
}

}  // namespace

CMatrix pauli_operator(std::string_view label) {
  check_label(label);
  if (static_cast<int>(label.size()) > kMaxDenseQubits) {
    throw CapacityError(fmt::format("{}-qubit Pauli exceeds dense cap", label.size()));
  }
  const int n = static_cast<int>(label.size());
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    CVector e = CVector::Zero(dim);
    e[col] = 1.0;
    out.col(col) = apply_pauli(StateVector(n, std::move(e)), label).amplitudes();
  }
  return out;
}

StateVector apply_pauli(const StateVector& state, std::string_view label) {
  check_label(label);
  if (static_cast<int>(label.size()) != state.n_qubits()) {
    throw DimensionError(fmt::format("{}-qubit Pauli applied to {}-qubit state", label.size(), state.n_qubits()));
  }
  std::uint64_t flip = 0, zmask = 0, ymask = 0;
  for (std::size_t q = 0; q < label.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (label[q]) {
      case 'X': flip |= bit; break;
      case 'Y': flip |= bit; ymask |= bit; break;
      case 'Z': zmask |= bit; break;
      default: break;
    }
  }
  // Y = i X Z: Y|b> = i (-1)^b |b^1>.
  const int n_y = std::popcount(ymask);
  static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex global = kIPow[n_y % 4];
  const CVector& in = state.amplitudes();
  CVector out(in.size());
  for (std::uint64_t b = 0; b < state.dim(); ++b) {
    const int sign_bits = std::popcount(b & (zmask | ymask));
    const Complex amp = in[static_cast<Eigen::Index>(b)] * global;
    out[static_cast<Eigen::Index>(b ^ flip)] = (sign_bits & 1) ? -amp : amp;
  }
  return StateVector(state.n_qubits(), std::move(out));
}

double pauli_expectation(const StateVector& state, std::string_view label) {
  return state.amplitudes().dot(apply_pauli(state, label).amplitudes()).real();
}

CMatrix PauliHamiltonian::dense() const {
  if (n_qubits > kMaxDenseQubits) {
    throw CapacityError(fmt::format("dense Hamiltonian on {} qubits exceeds cap of {}", n_qubits, kMaxDenseQubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CMatrix h = CMatrix::Zero(dim, dim);
  for (const auto& t : terms) {
    if (static_cast<int>(t.label.size()) != n_qubits) {
      throw DimensionError(fmt::format("label \"{}\" does not have {} qubits", t.label, n_qubits));
    }
    h += t.coefficient * pauli_operator(t.label);
  }
  return h;
}

std::size_t PauliHamiltonian::non_identity_term_count() const {
  return static_cast<std::size_t>(std::count_if(terms.begin(), terms.end(), [](const PauliTerm& t) {
    return t.label.find_first_not_of('I') != std::string::npos;
  }));
}

double exact_ground_energy(const PauliHamiltonian& h) {
  if (h.n_qubits < 1 || h.n_qubits > kMaxDenseQubits) {
    throw CapacityError(fmt::format("exact diagonalisation limited to {} qubits, got {}", kMaxDenseQubits, h.n_qubits));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.dense(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()[0];
}

}  // namespace pulseforge::qcore
