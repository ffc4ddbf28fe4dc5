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

#include "pulseforge/vqa/portfolio.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pulseforge/common/error.hpp"

namespace pulseforge::vqa {
namespace {

struct Quadratic {
  Eigen::MatrixXd q;
  Eigen::VectorXd c;
  double k = 0.0;
};

Quadratic quadratic_form(const PortfolioProblem& p) {
  Quadratic f;
  f.q = p.risk_factor * 0.5 * (p.covariance + p.covariance.transpose());
  f.c = -p.expected_returns;
  if (p.budget) {
    const double b = *p.budget;
    f.q.array() += p.penalty;
    f.c.array() -= 2.0 * p.penalty * b;
    f.k += p.penalty * b * b;
  }
  return f;
}

}  // namespace

void PortfolioProblem::validate() const {
  const auto n = expected_returns.size();
  if (n == 0) throw DimensionError("portfolio has no assets");
  if (n > qcore::kMaxDenseQubits) throw CapacityError(fmt::format("{} assets exceed the dense limit", n));
  if (covariance.rows() != n || covariance.cols() != n) {
    throw DimensionError(fmt::format("covariance is {}x{} for {} assets", covariance.rows(), covariance.cols(), n));
  }
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("covariance is not symmetric within 1e-12");
  }
  if (!expected_returns.allFinite() || !covariance.allFinite() || !std::isfinite(risk_factor)) {
    throw DomainError("portfolio contains non-finite values");
  }
  if (budget && (*budget < 0 || *budget > n)) throw DomainError(fmt::format("budget {} outside [0, {}]", *budget, n));
}

std::vector<std::string> PortfolioProblem::warnings() const {
  std::vector<std::string> out;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(covariance);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -1e-12) out.push_back(fmt::format("covariance is not positive semidefinite (min eigenvalue {:.3e})", min_eig));
  return out;
}

PortfolioProblem parse_portfolio(std::string_view json_text) {
  PortfolioProblem p;
  try {
    const auto j = nlohmann::json::parse(json_text);
    const auto mu = j.at("expected_returns").get<std::vector<double>>();
    const auto sigma = j.at("covariance").get<std::vector<std::vector<double>>>();
    p.expected_returns = Eigen::Map<const Eigen::VectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size()));
    p.covariance.resize(static_cast<Eigen::Index>(sigma.size()), static_cast<Eigen::Index>(sigma.size()));
    for (std::size_t r = 0; r < sigma.size(); ++r) {
      if (sigma[r].size() != sigma.size()) throw DimensionError(fmt::format("covariance row {} has wrong length", r));
      for (std::size_t c = 0; c < sigma.size(); ++c) {
        p.covariance(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = sigma[r][c];
      }
    }
    p.risk_factor = j.value("risk_factor", 0.5);
    p.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("budget") && !j["budget"].is_null()) p.budget = j["budget"].get<int>();
    p.penalty = j.value("penalty", 1.0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("portfolio: {}", e.what()));
  }
  p.validate();
  return p;
}

PortfolioProblem load_portfolio(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open portfolio file {}", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_portfolio(buf.str());
}

double portfolio_objective(const PortfolioProblem& p, std::uint64_t bits) {
  const int n = p.n_assets();
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = static_cast<double>((bits >> i) & 1U);
  double v = p.risk_factor * x.dot(p.covariance * x) - p.expected_returns.dot(x);
  if (p.budget) {
    const double s = x.sum() - *p.budget;
    v += p.penalty * s * s;
  }
  return v;
}

BruteForceResult brute_force_minimum(const PortfolioProblem& p) {
  p.validate();
  BruteForceResult best{portfolio_objective(p, 0), 0};
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << p.n_assets()); ++b) {
    const double v = portfolio_objective(p, b);
    if (v < best.value) best = {v, b};
  }
  return best;
}

qcore::PauliHamiltonian portfolio_to_ising(const PortfolioProblem& p) {
  p.validate();
  const int n = p.n_assets();
  const Quadratic f = quadratic_form(p);
  double constant = f.k;
  std::vector<double> z(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    constant += (f.q(i, i) + f.c(i)) / 2.0;
    z[static_cast<std::size_t>(i)] -= (f.q(i, i) + f.c(i)) / 2.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      constant += f.q(i, j) / 4.0;
      z[static_cast<std::size_t>(i)] -= f.q(i, j) / 2.0;
    }
  }
  qcore::PauliHamiltonian h;
  h.n_qubits = n;
  h.terms.push_back({constant, std::string(static_cast<std::size_t>(n), 'I')});
  for (int i = 0; i < n; ++i) {
    if (z[static_cast<std::size_t>(i)] == 0.0) continue;
    std::string label(static_cast<std::size_t>(n), 'I');
    label[static_cast<std::size_t>(i)] = 'Z';
    h.terms.push_back({z[static_cast<std::size_t>(i)], label});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double w = f.q(i, j) / 2.0;
      if (w == 0.0) continue;
      std::string label(static_cast<std::size_t>(n), 'I');
      label[static_cast<std::size_t>(i)] = 'Z';
      label[static_cast<std::size_t>(j)] = 'Z';
      h.terms.push_back({w, label});
    }
  }
  return h;
}

}  // namespace pulseforge::vqa
