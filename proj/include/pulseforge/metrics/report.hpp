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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pulseforge/metrics/expressivity.hpp"
#include "pulseforge/templates/ansatz.hpp"

namespace pulseforge::metrics {

struct MetricOptions {
  std::size_t samples = 5000;      // fidelity pairs for expressivity
  std::size_t ent_samples = 500;
  std::size_t bins = 50;
  std::size_t epd_points = 5;
  std::uint64_t seed = 0;
  bool with_expr = true;
  bool with_ent = true;
  bool with_epd = true;
};

struct MetricReport {
  std::string template_name;
  int n_qubits = 0;
  int n_layers = 0;
  std::optional<double> expr_kl;
  std::optional<double> ent_mean_q;
  std::optional<double> ent_max_q;
  std::optional<int> epd;
  int n_params = 0;
  int n_cr = 0;
  std::int64_t duration_dt = 0;      // longest schedule over the parameter box
  std::int64_t duration_min_dt = 0;  // shortest
  std::size_t samples = 0;
  std::size_t ent_samples = 0;
  std::size_t bins = 0;
  std::uint64_t seed = 0;
  std::optional<FidelityHistogram> histogram;
};

// Entanglement is skipped for single-qubit templates.
MetricReport compute_report(const templates::Ansatz& ansatz, int n_layers, const MetricOptions& opt);

nlohmann::json to_json(const MetricReport& r);

// Column order: template, n_qubits, n_layers, expr_kl, ent_mean_q, ent_max_q,
// epd, n_params, n_cr, duration_dt, samples, seed. Missing metrics are empty.
std::string csv_header();
std::string csv_row(const MetricReport& r);

// 12 significant digits.
std::string format_real(double v);

}  // namespace pulseforge::metrics
