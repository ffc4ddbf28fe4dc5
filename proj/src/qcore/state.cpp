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

#include "pulseforge/qcore/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::qcore {
namespace {

int log2_dim(Eigen::Index dim, const char* what) {
  if (dim <= 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError(fmt::format("{} dimension {} is not a power of two", what, dim));
  }
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  return k;
}

void check_targets(std::span<const int> targets, int n_qubits) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits) {
      throw IndexError(fmt::format("target qubit {} out of range for {} qubits", targets[i], n_qubits));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw IndexError(fmt::format("duplicate target qubit {}", targets[i]));
      }
    }
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw CapacityError(fmt::format("state of {} qubits outside [1, {}]", n_qubits, kMaxDenseQubits));
  }
  amplitudes_ = CVector::Zero(Eigen::Index{1} << n_qubits);
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
    throw CapacityError(fmt::format("state of {} qubits outside [1, {}]", n_qubits, kMaxDenseQubits));
  }
  if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw DimensionError(fmt::format("amplitude vector of length {} does not match {} qubits",
                                     amplitudes_.size(), n_qubits));
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw IndexError(fmt::format("basis index {} out of range for {} qubits", index, n_qubits));
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[static_cast<Eigen::Index>(index)] = 1.0;
  return s;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("cannot normalise the zero vector");
  return StateVector(n_qubits_, amplitudes_ / n);
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionError(fmt::format("operator is {}x{}, not square", entries_.rows(), entries_.cols()));
  }
  n_qubits_ = log2_dim(entries_.rows(), "operator");
}

UnitaryMatrix UnitaryMatrix::identity(int n_qubits) {
  return UnitaryMatrix(CMatrix::Identity(Eigen::Index{1} << n_qubits, Eigen::Index{1} << n_qubits));
}

double UnitaryMatrix::unitarity_error() const {
  return (entries_.adjoint() * entries_ - CMatrix::Identity(entries_.rows(), entries_.cols())).norm();
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) {
    throw DimensionError(fmt::format("cannot multiply {}- and {}-qubit operators", n_qubits_, rhs.n_qubits_));
  }
  return UnitaryMatrix(entries_ * rhs.entries_);
}

DensityMatrix::DensityMatrix(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw DimensionError("density matrix must be square");
  }
  n_qubits_ = log2_dim(entries_.rows(), "density matrix");
}

StateVector apply_embedded_unitary(StateVector state, const UnitaryMatrix& u,
                                   std::span<const int> targets) {
  const int n = state.n_qubits();
  const int k = static_cast<int>(targets.size());
  if (u.n_qubits() != k) {
    throw DimensionError(fmt::format("{}-qubit operator applied to {} targets", u.n_qubits(), k));
  }
  check_targets(targets, n);

  const std::size_t local_dim = std::size_t{1} << k;
  std::uint64_t target_mask = 0;
  std::vector<std::uint64_t> offsets(local_dim, 0);
  for (int j = 0; j < k; ++j) target_mask |= std::uint64_t{1} << targets[j];
  for (std::size_t l = 0; l < local_dim; ++l) {
    for (int j = 0; j < k; ++j) {
      if ((l >> j) & 1U) offsets[l] |= std::uint64_t{1} << targets[j];
    }
  }

  CVector& amps = state.mutable_amplitudes();
  const CMatrix& m = u.entries();
  std::vector<Complex> in(local_dim);
  const std::uint64_t dim = state.dim();
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (std::size_t l = 0; l < local_dim; ++l) in[l] = amps[static_cast<Eigen::Index>(base | offsets[l])];
    for (std::size_t r = 0; r < local_dim; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < local_dim; ++c) {
        acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      }
      amps[static_cast<Eigen::Index>(base | offsets[r])] = acc;
    }
  }
  return state;
}

UnitaryMatrix embed_unitary(const UnitaryMatrix& u, std::span<const int> targets, int n_qubits) {
  if (n_qubits > kMaxDenseQubits) {
    throw CapacityError(fmt::format("dense {}-qubit operator exceeds cap", n_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  CMatrix out(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    CVector e = CVector::Zero(dim);
    e[col] = 1.0;
    out.col(col) = apply_embedded_unitary(StateVector(n_qubits, std::move(e)), u, targets).amplitudes();
  }
  return UnitaryMatrix(std::move(out));
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError(fmt::format("fidelity between {}- and {}-dimensional states", a.dim(), b.dim()));
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

DensityMatrix partial_trace(const StateVector& state, int keep) {
  if (keep < 0 || keep >= state.n_qubits()) {
    throw IndexError(fmt::format("qubit {} out of range for {} qubits", keep, state.n_qubits()));
  }
  const std::uint64_t bit = std::uint64_t{1} << keep;
  const CVector& a = state.amplitudes();
  Complex r00 = 0.0, r01 = 0.0, r11 = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    if (i & bit) continue;
    const Complex a0 = a[static_cast<Eigen::Index>(i)];
    const Complex a1 = a[static_cast<Eigen::Index>(i | bit)];
    r00 += std::norm(a0);
    r11 += std::norm(a1);
    r01 += a0 * std::conj(a1);
  }
  CMatrix rho(2, 2);
  rho << r00, r01, std::conj(r01), r11;
  return DensityMatrix(std::move(rho));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().squaredNorm();
}

CMatrix exp_minus_i(const CMatrix& h, double scale) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  const Eigen::VectorXd& w = solver.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases[i] = std::polar(1.0, -scale * w[i]);
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace pulseforge::qcore
