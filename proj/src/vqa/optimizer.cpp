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

#include "pulseforge/vqa/optimizer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <numeric>

#include <fmt/format.h>

#include "pulseforge/common/rng.hpp"

namespace pulseforge::vqa {
namespace {

// Maps between box coordinates and optimizer units u = (theta - lo) / scale.
class Normalizer {
 public:
  explicit Normalizer(const Box& box) : box_(box) {
    for (std::size_t i = 0; i < box.size(); ++i) {
      scale_.push_back(box.scale.empty() ? box.hi[i] - box.lo[i] : box.scale[i]);
      extent_.push_back((box.hi[i] - box.lo[i]) / scale_[i]);
    }
  }

  std::vector<double> to_unit(std::span<const double> theta) const {
    std::vector<double> u(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) u[i] = (theta[i] - box_.lo[i]) / scale_[i];
    return fit(std::move(u));
  }

  std::vector<double> from_unit(std::span<const double> u) const {
    std::vector<double> t(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) t[i] = box_.lo[i] + u[i] * scale_[i];
    return t;
  }

  // Clamp, or wrap periodic coordinates into [0, extent).
  std::vector<double> fit(std::vector<double> u) const {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (box_.periodic[i]) {
        u[i] -= extent_[i] * std::floor(u[i] / extent_[i]);
      } else {
        u[i] = std::clamp(u[i], 0.0, extent_[i]);
      }
    }
    return u;
  }

  bool periodic(std::size_t i) const { return box_.periodic[i]; }
  double extent(std::size_t i) const { return extent_[i]; }

 private:
  const Box& box_;
  std::vector<double> scale_;
  std::vector<double> extent_;
};

class Recorder {
 public:
  Recorder(const Objective& f, const Normalizer& norm, std::uint64_t seed) : f_(f), norm_(norm) {
    trace_.seed = seed;
    trace_.best_energy = std::numeric_limits<double>::infinity();
  }

  double eval(std::span<const double> u) {
    const auto theta = norm_.from_unit(u);
    const double v = f_(theta);
    ++trace_.evaluations;
    if (!std::isfinite(v)) {
      throw NonFiniteObjective(
          fmt::format("objective returned {} at evaluation {} (theta hash {:016x})", v, trace_.evaluations,
                      theta_hash(theta)),
          trace_);
    }
    return v;
  }

  void record(int step, std::span<const double> u, double energy) {
    const auto theta = norm_.from_unit(u);
    trace_.iterations.push_back({step, theta_hash(theta), energy});
    if (energy < trace_.best_energy) {
      trace_.best_energy = energy;
      trace_.best_theta = theta;
    }
  }

  VQETrace take() { return std::move(trace_); }

 private:
  const Objective& f_;
  const Normalizer& norm_;
  VQETrace trace_;
};

VQETrace spsa(Recorder& rec, const Normalizer& norm, std::vector<double> u, const OptimizerConfig& cfg) {
  const std::size_t p = u.size();
  double fu = rec.eval(u);
  rec.record(0, u, fu);
  for (int k = 0; k < cfg.max_iterations && p > 0; ++k) {
    const double ak = cfg.a / std::pow(k + 1 + cfg.stability, cfg.alpha);
    const double ck = cfg.c / std::pow(k + 1, cfg.gamma);
    StreamRng rng(cfg.seed, static_cast<std::uint64_t>(k));
    std::vector<double> delta(p);
    for (auto& d : delta) d = (rng.next() >> 63) != 0 ? 1.0 : -1.0;

    // Shift the probe centre inward so both probes stay inside the box.
    std::vector<double> centre = u;
    for (std::size_t i = 0; i < p; ++i) {
      if (!norm.periodic(i)) {
        const double e = norm.extent(i);
        centre[i] = std::clamp(centre[i], std::min(ck, e / 2), std::max(e - ck, e / 2));
      }
    }
    std::vector<double> plus(p);
    std::vector<double> minus(p);
    for (std::size_t i = 0; i < p; ++i) {
      plus[i] = centre[i] + ck * delta[i];
      minus[i] = centre[i] - ck * delta[i];
    }
    const double diff = (rec.eval(norm.fit(plus)) - rec.eval(norm.fit(minus))) / (2.0 * ck);
    std::vector<double> next = u;
    for (std::size_t i = 0; i < p; ++i) next[i] -= ak * diff / delta[i];
    next = norm.fit(std::move(next));
    const double fn = rec.eval(next);
    if (!cfg.blocking || fn <= fu) {
      u = std::move(next);
      fu = fn;
    }
    rec.record(k + 1, u, fu);
  }
  return rec.take();
}

VQETrace nelder_mead(Recorder& rec, const Normalizer& norm, std::vector<double> u, const OptimizerConfig& cfg) {
  const std::size_t p = u.size();
  if (p == 0) {
    rec.record(0, u, rec.eval(u));
    return rec.take();
  }
  std::vector<std::vector<double>> simplex{u};
  for (std::size_t i = 0; i < p; ++i) {
    auto v = u;
    // Step away from the nearer bound.
    v[i] += (v[i] + cfg.simplex_step <= norm.extent(i) || norm.periodic(i)) ? cfg.simplex_step : -cfg.simplex_step;
    simplex.push_back(norm.fit(std::move(v)));
  }
  std::vector<double> fv(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) fv[i] = rec.eval(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
  };
  auto affine = [&](const std::vector<double>& base, const std::vector<double>& dir, double t) {
    std::vector<double> out(p);
    for (std::size_t i = 0; i < p; ++i) out[i] = base[i] + t * (dir[i] - base[i]);
    return norm.fit(std::move(out));
  };

  for (int k = 0; k < cfg.max_iterations; ++k) {
    sort_simplex();
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[order.size() - 2];
    rec.record(k, simplex[best], fv[best]);
    if (fv[worst] - fv[best] <= cfg.tolerance) break;

    std::vector<double> centroid(p, 0.0);
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
      for (std::size_t i = 0; i < p; ++i) centroid[i] += simplex[order[j]][i] / static_cast<double>(p);
    }
    const auto reflected = affine(centroid, simplex[worst], -1.0);
    const double fr = rec.eval(reflected);
    if (fr < fv[best]) {
      const auto expanded = affine(centroid, simplex[worst], -2.0);
      const double fe = rec.eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        fv[worst] = fe;
      } else {
        simplex[worst] = reflected;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      simplex[worst] = reflected;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const auto contracted = outside ? affine(centroid, reflected, 0.5) : affine(centroid, simplex[worst], 0.5);
    const double fc = rec.eval(contracted);
    if (fc < std::min(fr, fv[worst])) {
      simplex[worst] = contracted;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t j = 1; j < order.size(); ++j) {
      const std::size_t idx = order[j];
      simplex[idx] = affine(simplex[best], simplex[idx], 0.5);
      fv[idx] = rec.eval(simplex[idx]);
    }
  }
  sort_simplex();
  rec.record(cfg.max_iterations, simplex[order.front()], fv[order.front()]);
  return rec.take();
}

}  // namespace

std::string_view to_string(OptimizerMethod m) { return m == OptimizerMethod::kSpsa ? "spsa" : "nelder-mead"; }

OptimizerMethod optimizer_method_from_string(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "spsa") return OptimizerMethod::kSpsa;
  if (s == "nelder-mead" || s == "nelder_mead" || s == "nm") return OptimizerMethod::kNelderMead;
  throw DomainError(fmt::format("unknown optimizer \"{}\"", name));
}

void OptimizerConfig::validate() const {
  if (max_iterations < 1) throw DomainError(fmt::format("max_iterations must be >= 1, got {}", max_iterations));
  if (!(a > 0 && c > 0 && stability >= 0 && alpha > 0 && gamma > 0)) {
    throw DomainError("SPSA gains must be positive");
  }
  if (!(simplex_step > 0)) throw DomainError("simplex_step must be positive");
}

Box Box::from_layout(const templates::ParameterLayout& layout) {
  Box b;
  for (const auto& p : layout) {
    b.lo.push_back(p.lo);
    b.hi.push_back(p.hi);
    b.periodic.push_back(p.periodic);
    b.scale.push_back(p.scale);
  }
  return b;
}

std::string VQETrace::to_csv() const {
  std::string out = "step,energy\n";
  for (const auto& e : iterations) out += fmt::format("{},{:.12g}\n", e.step, e.energy);
  return out;
}

nlohmann::json VQETrace::summary() const {
  nlohmann::json j;
  j["best_energy"] = best_energy;
  j["best_theta"] = best_theta;
  j["evaluations"] = evaluations;
  j["iterations"] = iterations.size();
  j["seed"] = seed;
  return j;
}

std::uint64_t theta_hash(std::span<const double> theta) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : theta) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

VQETrace optimize(const Objective& f, std::span<const double> theta0, const Box& box, const OptimizerConfig& config) {
  config.validate();
  if (box.lo.size() != theta0.size() || box.hi.size() != theta0.size() || box.periodic.size() != theta0.size() ||
      (!box.scale.empty() && box.scale.size() != theta0.size())) {
    throw DimensionError(fmt::format("box has {} coordinates, theta0 {}", box.lo.size(), theta0.size()));
  }
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!(box.hi[i] > box.lo[i])) throw DomainError(fmt::format("empty box along coordinate {}", i));
    if (!box.scale.empty() && !(box.scale[i] > 0)) throw DomainError(fmt::format("non-positive scale along {}", i));
  }
  const Normalizer norm(box);
  Recorder rec(f, norm, config.seed);
  auto u = norm.to_unit(theta0);
  return config.method == OptimizerMethod::kSpsa ? spsa(rec, norm, std::move(u), config)
                                                 : nelder_mead(rec, norm, std::move(u), config);
}

}  // namespace pulseforge::vqa
