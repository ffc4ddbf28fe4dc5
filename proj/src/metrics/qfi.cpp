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

#include "pulseforge/metrics/qfi.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/parallel.hpp"

namespace pulseforge::metrics {
namespace {

constexpr std::uint64_t kStreamTag = std::uint64_t{0x515049} << 40;

double step_for(const templates::ParamDescriptor& p, const QfiOptions& opt) {
  return p.is_duration() ? opt.epsilon_duration : opt.epsilon;
}

void check_interior(const templates::Ansatz& ansatz, std::span<const double> theta, const QfiOptions& opt) {
  const auto& layout = ansatz.layout();
  if (theta.size() != layout.size()) {
    throw DimensionError(fmt::format("{} takes {} parameters, got {}", ansatz.name(), layout.size(), theta.size()));
  }
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto& p = layout[i];
    if (p.periodic) continue;
    const double h = step_for(p, opt);
    if (theta[i] - h < p.lo || theta[i] + h > p.hi) {
      throw DomainError(fmt::format("theta[{}] = {} ({} of op {}) is within {} of its range [{}, {}]", i, theta[i],
                                    pulse::to_string(p.field), p.owner, h, p.lo, p.hi));
    }
  }
}

// Column i holds the central-difference derivative of f along coordinate i.
template <typename F>
Eigen::MatrixXcd jacobian(const templates::Ansatz& ansatz, std::span<const double> theta, const QfiOptions& opt,
                          Eigen::Index rows, F&& f) {
  const auto& layout = ansatz.layout();
  Eigen::MatrixXcd jac(rows, static_cast<Eigen::Index>(layout.size()));
  parallel_for(layout.size(), [&](std::size_t i) {
    const double h = step_for(layout[i], opt);
    std::vector<double> plus(theta.begin(), theta.end());
    std::vector<double> minus = plus;
    plus[i] += h;
    minus[i] -= h;
    jac.col(static_cast<Eigen::Index>(i)) = (f(plus) - f(minus)) / (2.0 * h);
  });
  return jac;
}

int rank_of(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  const Eigen::VectorXd s = Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  if (smax < 1e-12) return 0;
  return static_cast<int>((s.array() > rel_tol * smax).count());
}

int median_of(std::vector<int> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

QFIMatrix qfi_matrix(const templates::Ansatz& ansatz, std::span<const double> theta, const QfiOptions& opt) {
  check_interior(ansatz, theta, opt);
  const qcore::CVector psi = ansatz.prepare(theta, true).amplitudes();
  const Eigen::MatrixXcd d = jacobian(ansatz, theta, opt, psi.size(), [&](const std::vector<double>& t) {
    return ansatz.prepare(t, true).amplitudes();
  });
  const Eigen::VectorXcd overlap = d.adjoint() * psi;  // <d_i psi|psi>
  Eigen::MatrixXd f = (d.adjoint() * d).real() - (overlap * overlap.adjoint()).real();
  f = 0.5 * (f + f.transpose()).eval();
  return {std::move(f), opt.epsilon, opt.epsilon_duration};
}

int epd(const QFIMatrix& qfi, double rel_tol) { return rank_of(qfi.entries, rel_tol); }

int unitary_epd(const templates::Ansatz& ansatz, std::span<const double> theta, const QfiOptions& opt,
                double rel_tol) {
  check_interior(ansatz, theta, opt);
  const qcore::CMatrix u = ansatz.unitary(theta, true).entries();
  const Eigen::Index n = u.size();
  auto flat = [](const qcore::CMatrix& m) { return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size()).eval(); };
  Eigen::MatrixXcd d = jacobian(ansatz, theta, opt, n, [&](const std::vector<double>& t) {
    return flat(ansatz.unitary(t, true).entries());
  });
  // Remove the global-phase direction i U under the real inner product.
  const Eigen::VectorXcd phase = qcore::Complex(0.0, 1.0) * flat(u);
  const double norm2 = phase.squaredNorm();
  for (Eigen::Index c = 0; c < d.cols(); ++c) {
    const double proj = phase.dot(d.col(c)).real() / norm2;
    d.col(c) -= proj * phase;
  }
  Eigen::MatrixXd real(2 * n, d.cols());
  real.topRows(n) = d.real();
  real.bottomRows(n) = d.imag();
  return rank_of(real, rel_tol);
}

EpdResult median_epd(const templates::Ansatz& ansatz, std::size_t n_points, std::uint64_t seed,
                     const QfiOptions& opt) {
  EpdResult r;
  for (std::size_t k = 0; k < n_points; ++k) {
    StreamRng rng(seed, kStreamTag | k);
    const auto theta = templates::sample_interior(ansatz.layout(), rng, opt.epsilon, opt.epsilon_duration);
    r.per_point.push_back(epd(qfi_matrix(ansatz, theta, opt)));
  }
  r.epd = median_of(r.per_point);
  return r;
}

EpdResult median_unitary_epd(const templates::Ansatz& ansatz, std::size_t n_points, std::uint64_t seed,
                             const QfiOptions& opt) {
  EpdResult r;
  for (std::size_t k = 0; k < n_points; ++k) {
    StreamRng rng(seed, kStreamTag | k);
    const auto theta = templates::sample_interior(ansatz.layout(), rng, opt.epsilon, opt.epsilon_duration);
    r.per_point.push_back(unitary_epd(ansatz, theta, opt));
  }
  r.epd = median_of(r.per_point);
  return r;
}

}  // namespace pulseforge::metrics
