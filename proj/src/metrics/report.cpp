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

#include "pulseforge/metrics/report.hpp"

#include <fmt/format.h>

#include "pulseforge/metrics/entanglement.hpp"
#include "pulseforge/metrics/qfi.hpp"

namespace pulseforge::metrics {
namespace {

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return format_real(*v);
  } else {
    return fmt::format("{}", *v);
  }
}

template <typename T>
nlohmann::json maybe(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.12g}", v); }

MetricReport compute_report(const templates::Ansatz& ansatz, int n_layers, const MetricOptions& opt) {
  MetricReport r;
  r.template_name = ansatz.name();
  r.n_qubits = ansatz.n_qubits();
  r.n_layers = n_layers;
  r.n_params = static_cast<int>(ansatz.n_params());
  r.n_cr = ansatz.n_two_qubit_ops();
  const auto [lo, hi] = ansatz.duration_range();
  r.duration_min_dt = lo;
  r.duration_dt = hi;
  r.seed = opt.seed;
  r.bins = opt.bins;
  if (opt.with_expr) {
    r.samples = opt.samples;
    auto h = fidelity_histogram(ansatz, opt.samples, opt.bins, opt.seed);
    r.expr_kl = expressivity(h, ansatz.n_qubits());
    r.histogram = std::move(h);
  }
  if (opt.with_ent && ansatz.n_qubits() >= 2) {
    r.ent_samples = opt.ent_samples;
    const auto e = entanglement_capability(ansatz, opt.ent_samples, opt.seed);
    r.ent_mean_q = e.mean_q;
    r.ent_max_q = e.max_q;
  }
  if (opt.with_epd) r.epd = median_epd(ansatz, opt.epd_points, opt.seed).epd;
  return r;
}

nlohmann::json to_json(const MetricReport& r) {
  nlohmann::json j;
  j["template"] = r.template_name;
  j["n_qubits"] = r.n_qubits;
  j["n_layers"] = r.n_layers;
  j["expr_kl"] = maybe(r.expr_kl);
  j["ent_mean_q"] = maybe(r.ent_mean_q);
  j["ent_max_q"] = maybe(r.ent_max_q);
  j["epd"] = maybe(r.epd);
  j["n_params"] = r.n_params;
  j["n_cr"] = r.n_cr;
  j["duration_dt"] = r.duration_dt;
  j["duration_min_dt"] = r.duration_min_dt;
  j["samples"] = r.samples;
  j["ent_samples"] = r.ent_samples;
  j["bins"] = r.bins;
  j["seed"] = r.seed;
  if (r.histogram) j["histogram"] = r.histogram->counts;
  return j;
}

std::string csv_header() {
  return "template,n_qubits,n_layers,expr_kl,ent_mean_q,ent_max_q,epd,n_params,n_cr,duration_dt,samples,seed";
}

std::string csv_row(const MetricReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{},{}", r.template_name, r.n_qubits, r.n_layers, cell(r.expr_kl),
                     cell(r.ent_mean_q), cell(r.ent_max_q), cell(r.epd), r.n_params, r.n_cr, r.duration_dt,
                     r.samples, r.seed);
}

}  // namespace pulseforge::metrics
