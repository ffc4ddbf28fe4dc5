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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace pulseforge::qcore {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Dense simulation cap. 2^12 amplitudes / 4096x4096 Hamiltonians.
inline constexpr int kMaxDenseQubits = 12;

// Convention used everywhere: qubit q is bit q of the basis-state index, i.e.
// qubit 0 is the least-significant bit.
class StateVector {
 public:
  // |0...0>
  explicit StateVector(int n_qubits);
  // Takes ownership of amplitudes; length must be 2^n_qubits. No normalisation
  // is applied.
  StateVector(int n_qubits, CVector amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[static_cast<Eigen::Index>(i)]; }

  double norm() const { return amplitudes_.norm(); }
  StateVector normalized() const;

  // Mutable access for kernels that transform a state they own.
  CVector& mutable_amplitudes() { return amplitudes_; }

 private:
  int n_qubits_;
  CVector amplitudes_;
};

// Square complex matrix of dimension 2^k acting on k qubits. Unitarity is not
// enforced on construction (products of many factors drift at the 1e-15
// level); use unitarity_error() to check.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMatrix entries);
  static UnitaryMatrix identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  // Frobenius norm of U^dagger U - I.
  double unitarity_error() const;

  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

 private:
  int n_qubits_;
  CMatrix entries_;
};

// Reduced state of k kept qubits.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries);

  int n_qubits() const { return n_qubits_; }
  const CMatrix& entries() const { return entries_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

 private:
  int n_qubits_;
  CMatrix entries_;
};

// Applies u to the listed qubits. targets[j] is the qubit addressed by bit j of
// u's local index, so targets = {c, t} with u built from a "ct" Pauli label
// places label position 0 on c.
StateVector apply_embedded_unitary(StateVector state, const UnitaryMatrix& u,
                                   std::span<const int> targets);

// Dense 2^n x 2^n operator equal to u acting on targets (identity elsewhere).
UnitaryMatrix embed_unitary(const UnitaryMatrix& u, std::span<const int> targets, int n_qubits);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// Single-qubit reduced density matrix of qubit keep.
DensityMatrix partial_trace(const StateVector& state, int keep);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

// exp(-i * scale * h) for Hermitian h, via a self-adjoint eigen-decomposition.
CMatrix exp_minus_i(const CMatrix& h, double scale);

}  // namespace pulseforge::qcore
