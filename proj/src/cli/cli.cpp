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

#include "pulseforge/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "pulseforge/common/error.hpp"
#include "pulseforge/common/parallel.hpp"
#include "pulseforge/metrics/expressivity.hpp"
#include "pulseforge/metrics/report.hpp"
#include "pulseforge/pulse/schedule.hpp"
#include "pulseforge/sim/propagate.hpp"
#include "pulseforge/templates/ansatz.hpp"
#include "pulseforge/vqa/portfolio.hpp"
#include "pulseforge/vqa/vqe.hpp"

#ifndef PULSEFORGE_VERSION
#define PULSEFORGE_VERSION "0.0.0"
#endif

namespace pulseforge::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Reported to the user as a usage problem (exit 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr int kBuiltinDeviceQubits = qcore::kMaxDenseQubits;

struct DeviceContext {
  pulse::DeviceModel device;
  pulse::ConstraintSpec constraints;
  std::string source;
  std::uint64_t hash = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open {}", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << content;
}

DeviceContext device_context(const std::string& path, const std::string& backend) {
  DeviceContext ctx;
  if (path.empty()) {
    ctx.device = pulse::ideal_device(kBuiltinDeviceQubits);
    ctx.source = "builtin:" + ctx.device.name;
    ctx.hash = fnv1a(pulse::serialize_device(ctx.device));
  } else {
    const std::string text = read_file(path);
    try {
      ctx.device = pulse::parse_device(text);
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("{}: {}", path, e.what()));
    }
    ctx.source = path;
    ctx.hash = fnv1a(text);
  }
  ctx.constraints = pulse::constraint_spec_for(backend.empty() ? ctx.device.backend : backend);
  return ctx;
}

json provenance(const DeviceContext& ctx, std::uint64_t seed) {
  json j;
  j["tool"] = "pulseforge";
  j["version"] = std::string(tool_version());
  j["seed"] = seed;
  j["device"] = ctx.source;
  j["device_hash"] = fmt::format("{:016x}", ctx.hash);
  j["backend"] = ctx.constraints.backend;
  return j;
}

std::string csv_preamble(const json& prov) {
  return fmt::format("# tool=pulseforge version={} seed={} device={} device_hash={} backend={}\n",
                     prov["version"].get<std::string>(), prov["seed"].get<std::uint64_t>(),
                     prov["device"].get<std::string>(), prov["device_hash"].get<std::string>(),
                     prov["backend"].get<std::string>());
}

std::string file_token(std::string s) {
  for (auto& c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  }
  return s;
}

// --- metrics (report / expr / ent / epd) -----------------------------------

struct MetricArgs {
  std::vector<std::string> templates{"1"};
  std::string qubits = "2";
  std::string layers = "1";
  std::optional<std::size_t> samples;
  std::size_t ent_samples = 500;
  std::size_t bins = 50;
  std::size_t epd_points = 5;
  std::uint64_t seed = 0;
  std::string device;
  std::string backend;
  std::string out;
  std::vector<std::string> formats;
};

void add_metric_options(CLI::App* sub, MetricArgs& a, bool ent_only) {
  sub->add_option("--template,-t", a.templates, "Template ids/names or gate baselines (comma separated)")
      ->delimiter(',');
  sub->add_option("--qubits,-n", a.qubits, "Qubit counts: 3, 2-4 or 2,3,5");
  sub->add_option("--layers,-l", a.layers, "Layer counts, same syntax as --qubits");
  sub->add_option("--samples", a.samples,
                  ent_only ? "Parameter draws (default 500)" : "Fidelity pairs for expressivity (default 5000)");
  if (!ent_only) sub->add_option("--ent-samples", a.ent_samples, "Parameter draws for entanglement");
  sub->add_option("--bins", a.bins, "Histogram bins");
  sub->add_option("--epd-points", a.epd_points, "Parameter points for the median EPD");
  sub->add_option("--seed", a.seed, "Random seed");
  sub->add_option("--device", a.device, "Device JSON file (default: built-in ideal linear chain)");
  sub->add_option("--backend", a.backend, "Constraint table entry (default: the device's backend)");
  sub->add_option("--out,-o", a.out, "Output directory (default: CSV on stdout)");
  sub->add_option("--format", a.formats, "csv, json and/or svg")->delimiter(',')->check(CLI::IsMember({"csv", "json", "svg"}));
}

struct Cell {
  std::size_t template_index;
  std::string name;
  int n_qubits;
  int n_layers;
};

int cmd_metrics(const std::string& kind, MetricArgs a, std::ostream& out, std::ostream& err) {
  if (a.bins == 0) throw UsageError("--bins must be positive");
  if (a.formats.empty()) a.formats = {"csv"};
  const bool want = [&](std::string_view f) { return std::find(a.formats.begin(), a.formats.end(), f) != a.formats.end(); }("svg");
  if (want && a.out.empty()) throw UsageError("--format svg needs --out");
  if (a.templates.empty()) throw UsageError("no template given");

  std::vector<int> qubits;
  std::vector<int> layers;
  try {
    qubits = parse_int_range(a.qubits);
    layers = parse_int_range(a.layers);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  metrics::MetricOptions opt;
  opt.seed = a.seed;
  opt.bins = a.bins;
  opt.epd_points = a.epd_points;
  opt.ent_samples = a.ent_samples;
  opt.samples = 5000;
  opt.with_expr = kind == "report" || kind == "expr";
  opt.with_ent = kind == "report" || kind == "ent";
  opt.with_epd = kind == "report" || kind == "epd";
  if (kind == "ent") {
    opt.ent_samples = a.samples.value_or(500);
  } else if (a.samples) {
    opt.samples = *a.samples;
  }

  const DeviceContext ctx = device_context(a.device, a.backend);
  std::vector<Cell> cells;
  for (std::size_t t = 0; t < a.templates.size(); ++t) {
    for (int n : qubits) {
      for (int l : layers) cells.push_back({t, a.templates[t], n, l});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    return std::tie(x.template_index, x.n_qubits, x.n_layers) < std::tie(y.template_index, y.n_qubits, y.n_layers);
  });

  std::vector<metrics::MetricReport> reports;
  for (const auto& c : cells) {
    std::unique_ptr<templates::Ansatz> ansatz;
    try {
      ansatz = templates::make_ansatz(c.name, c.n_qubits, c.n_layers, ctx.device, ctx.constraints, a.seed);
    } catch (const TemplateError& e) {
      throw UsageError(e.what());
    }
    if (kind == "ent" && ansatz->n_qubits() < 2) {
      throw UsageError(fmt::format("entanglement needs at least 2 qubits ({} has {})", ansatz->name(),
                                   ansatz->n_qubits()));
    }
    reports.push_back(metrics::compute_report(*ansatz, c.n_layers, opt));
  }

  const json prov = provenance(ctx, a.seed);
  std::string csv = csv_preamble(prov) + metrics::csv_header() + "\n";
  for (const auto& r : reports) csv += metrics::csv_row(r) + "\n";
  json doc = prov;
  doc["command"] = kind;
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(metrics::to_json(r));

  auto has = [&](std::string_view f) { return std::find(a.formats.begin(), a.formats.end(), f) != a.formats.end(); };
  if (a.out.empty()) {
    if (has("csv")) out << csv;
    if (has("json")) out << doc.dump(2) << "\n";
    return kExitOk;
  }
  const fs::path dir(a.out);
  if (has("csv")) write_file(dir / (kind + ".csv"), csv);
  if (has("json")) write_file(dir / (kind + ".json"), doc.dump(2) + "\n");
  if (has("svg")) {
    for (const auto& r : reports) {
      if (!r.histogram) continue;
      const std::string title = fmt::format("{} n={} L={} seed={} expr={}", r.template_name, r.n_qubits, r.n_layers,
                                            r.seed, r.expr_kl ? metrics::format_real(*r.expr_kl) : "-");
      const std::string svg = render_histogram_svg(*r.histogram, r.n_qubits, title);
      // Provenance as an XML comment after the root element keeps the file valid.
      const std::string tagged = svg.substr(0, svg.find('\n') + 1) +
                                 fmt::format("<!-- pulseforge {} seed={} device_hash={} -->\n", tool_version(), r.seed,
                                             prov["device_hash"].get<std::string>()) +
                                 svg.substr(svg.find('\n') + 1);
      write_file(dir / fmt::format("hist_{}_n{}_l{}.svg", file_token(r.template_name), r.n_qubits, r.n_layers),
                 tagged);
    }
  }
  err << fmt::format("wrote {} row(s) to {}\n", reports.size(), dir.string());
  return kExitOk;
}

// --- bloch -----------------------------------------------------------------

struct BlochArgs {
  std::string sweep;
  std::size_t samples = 5000;
  double amplitude = 0.08;
  std::uint64_t seed = 0;
  std::string device;
  std::string backend;
  std::string out;
};

int cmd_bloch(const BlochArgs& a, std::ostream& out, std::ostream& err) {
  const DeviceContext ctx = device_context(a.device, a.backend);
  const auto& d = ctx.device;
  const bool amp_sweep = a.sweep == "amplitude";
  const std::int64_t duration = d.cal_duration;
  const auto env = pulse::Envelope::gaussian_for(duration, d.drag_beta);

  std::vector<std::array<double, 4>> rows(a.samples);
  parallel_for(a.samples, [&](std::size_t i) {
    StreamRng rng(a.seed, i);
    pulse::PulseParams p;
    p.duration = duration;
    double value = 0.0;
    if (amp_sweep) {
      value = rng.uniform(ctx.constraints.amplitude_lo, ctx.constraints.amplitude_hi);
      p.amplitude = value;
      p.angle = 0.0;
    } else {
      value = rng.uniform(0.0, 2.0 * std::numbers::pi);
      p.amplitude = a.amplitude;
      p.angle = value;
    }
    const auto u = sim::sqp_unitary(p, env, d);
    const qcore::Complex c0 = u(0, 0);
    const qcore::Complex c1 = u(1, 0);
    const qcore::Complex coh = std::conj(c0) * c1;
    rows[i] = {value, 2.0 * coh.real(), 2.0 * coh.imag(), std::norm(c0) - std::norm(c1)};
  });

  std::string csv = csv_preamble(provenance(ctx, a.seed));
  csv += fmt::format("# sweep={} samples={} duration_dt={}{}\n", a.sweep, a.samples, duration,
                     amp_sweep ? std::string(" angle=0") : fmt::format(" amplitude={}", a.amplitude));
  csv += fmt::format("{},x,y,z\n", amp_sweep ? "amplitude" : "angle");
  for (const auto& r : rows) {
    csv += fmt::format("{},{},{},{}\n", metrics::format_real(r[0]), metrics::format_real(r[1]),
                       metrics::format_real(r[2]), metrics::format_real(r[3]));
  }
  if (a.out.empty()) {
    out << csv;
  } else {
    write_file(a.out, csv);
    err << fmt::format("wrote {} row(s) to {}\n", rows.size(), a.out);
  }
  return kExitOk;
}

// --- vqe -------------------------------------------------------------------

struct VqeArgs {
  std::string hamiltonian;
  std::string portfolio;
  std::string template_name = "2";
  int layers = 1;
  std::string optimizer = "spsa";
  int iterations = 500;
  int restarts = 1;
  vqa::OptimizerConfig gains;
  std::uint64_t seed = 0;
  std::string baseline = "TWOLOCAL";
  int baseline_reps = 3;
  std::string device;
  std::string backend;
  std::string out;
};

int cmd_vqe(const VqeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.hamiltonian.empty() == a.portfolio.empty()) throw UsageError("give exactly one of --hamiltonian, --portfolio");
  const DeviceContext ctx = device_context(a.device, a.backend);

  json summary = provenance(ctx, a.seed);
  qcore::PauliHamiltonian h;
  std::optional<vqa::PortfolioProblem> portfolio;
  if (!a.hamiltonian.empty()) {
    h = vqa::load_hamiltonian(a.hamiltonian);
    summary["hamiltonian"] = a.hamiltonian;
  } else {
    portfolio = vqa::load_portfolio(a.portfolio);
    for (const auto& w : portfolio->warnings()) err << "warning: " << w << "\n";
    h = vqa::portfolio_to_ising(*portfolio);
    summary["portfolio"] = a.portfolio;
  }
  summary["n_qubits"] = h.n_qubits;
  summary["n_terms"] = h.terms.size();
  summary["n_non_identity_terms"] = h.non_identity_term_count();

  std::unique_ptr<templates::Ansatz> ansatz;
  try {
    ansatz = templates::make_ansatz(a.template_name, h.n_qubits, a.layers, ctx.device, ctx.constraints, a.seed);
  } catch (const TemplateError& e) {
    throw UsageError(e.what());
  }

  vqa::VqeOptions opt;
  opt.optimizer = a.gains;
  try {
    opt.optimizer.method = vqa::optimizer_method_from_string(a.optimizer);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  opt.optimizer.max_iterations = a.iterations;
  opt.optimizer.seed = a.seed;
  opt.restarts = a.restarts;
  const vqa::VqeResult r = vqa::vqe(h, *ansatz, opt);

  summary["result"] = vqa::to_json(r);
  summary["template"] = ansatz->name();
  summary["optimizer"] = std::string(vqa::to_string(opt.optimizer.method));
  summary["exact_energy"] = r.exact_energy;
  summary["best_energy"] = r.trace.best_energy;
  summary["gap"] = r.gap;
  summary["duration_dt"] = r.duration_dt;
  if (!a.baseline.empty()) {
    const templates::GateAnsatz base(templates::gate_baseline_from_string(a.baseline), h.n_qubits, a.baseline_reps,
                                     ctx.device);
    json b;
    b["name"] = base.name();
    b["reps"] = a.baseline_reps;
    b["duration_dt"] = base.duration_range().first;
    summary["baseline"] = b;
    summary["duration_ratio"] =
        static_cast<double>(r.duration_dt) / static_cast<double>(std::max<std::int64_t>(base.duration_range().first, 1));
  }
  if (portfolio) {
    const auto bf = vqa::brute_force_minimum(*portfolio);
    const auto state = ansatz->prepare(r.trace.best_theta);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < state.dim(); ++i) {
      if (std::norm(state[i]) > std::norm(state[arg])) arg = i;
    }
    auto bits = [&](std::uint64_t v) {
      std::string s;
      for (int q = 0; q < h.n_qubits; ++q) s += ((v >> q) & 1U) != 0 ? '1' : '0';
      return s;
    };
    summary["brute_force_minimum"] = bf.value;
    summary["brute_force_selection"] = bits(bf.bits);
    summary["vqe_selection"] = bits(arg);
    summary["vqe_selection_probability"] = std::norm(state[arg]);
    summary["optimum_found"] = arg == bf.bits;
  }

  const std::string trace_csv = csv_preamble(provenance(ctx, a.seed)) + r.trace.to_csv();
  if (a.out.empty()) {
    out << summary.dump(2) << "\n";
  } else {
    const fs::path dir(a.out);
    write_file(dir / "trace.csv", trace_csv);
    write_file(dir / "summary.json", summary.dump(2) + "\n");
    err << fmt::format("best {:.10f} exact {:.10f} gap {:.3e}; wrote {}\n", r.trace.best_energy, r.exact_energy,
                       r.gap, dir.string());
  }
  return kExitOk;
}

// --- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string schedule;
  std::string backend = "default";
  std::string out;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  pulse::Schedule s;
  try {
    s = pulse::load_schedule(a.schedule);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  const auto c = pulse::constraint_spec_for(a.backend);
  out << fmt::format("schedule {} ({} instructions), backend {}: amplitude [{}, {}], duration [{}, {}] step {}\n",
                     a.schedule, s.instructions.size(), c.backend, c.amplitude_lo, c.amplitude_hi, c.duration_lo,
                     c.duration_hi, c.duration_granularity);
  json report;
  report["tool"] = "pulseforge";
  report["version"] = std::string(tool_version());
  report["schedule"] = a.schedule;
  report["schedule_hash"] = fmt::format("{:016x}", fnv1a(read_file(a.schedule)));
  report["backend"] = c.backend;
  report["violations"] = json::array();
  std::size_t failures = 0;
  for (std::size_t i = 0; i < s.instructions.size(); ++i) {
    const auto& ins = s.instructions[i];
    pulse::FieldMask checked = pulse::kAllFields;
    if (ins.kind == pulse::InstructionKind::kDelay) {
      checked = pulse::kNoFields;
    } else if (ins.free != pulse::kNoFields) {
      checked = ins.free;
    }
    const auto v = pulse::validate_params(ins.params, c, checked);
    for (const auto& fv : v.violations) {
      ++failures;
      out << fmt::format("instructions[{}] {} on {}: {}: {}\n", i, pulse::to_string(ins.kind),
                         pulse::to_string(ins.channel), pulse::to_string(fv.kind), fv.message);
      report["violations"].push_back(
          {{"instruction", i}, {"kind", std::string(pulse::to_string(fv.kind))}, {"message", fv.message}});
    }
  }
  try {
    pulse::check_schedule(s);
  } catch (const Error& e) {
    ++failures;
    out << fmt::format("schedule: {}\n", e.what());
    report["violations"].push_back({{"instruction", nullptr}, {"kind", "schedule"}, {"message", e.what()}});
  }
  report["ok"] = failures == 0;
  out << (failures == 0 ? "ok\n" : fmt::format("{} violation(s)\n", failures));
  if (!a.out.empty()) write_file(a.out, report.dump(2) + "\n");
  return failures == 0 ? kExitOk : kExitValidation;
}

}  // namespace

std::string_view tool_version() { return PULSEFORGE_VERSION; }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<int> parse_int_range(std::string_view text) {
  std::vector<int> out;
  auto to_int = [&](std::string_view s) {
    try {
      std::size_t used = 0;
      const std::string str(s);
      const int v = std::stoi(str, &used);
      if (used != str.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw DomainError(fmt::format("bad integer \"{}\" in \"{}\"", s, text));
    }
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view part = text.substr(start, end - start);
    start = end + 1;
    if (part.empty()) throw DomainError(fmt::format("empty item in \"{}\"", text));
    const auto dash = part.find('-', 1);
    if (dash == std::string_view::npos) {
      out.push_back(to_int(part));
    } else {
      const int lo = to_int(part.substr(0, dash));
      const int hi = to_int(part.substr(dash + 1));
      if (hi < lo) throw DomainError(fmt::format("descending range \"{}\"", part));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pulseforge: pulse-level ansatz metrics, simulation and VQE"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: PULSEFORGE_THREADS or all cores)");

  std::map<std::string, MetricArgs> metric_args;
  std::map<std::string, CLI::App*> metric_cmds;
  const std::pair<const char*, const char*> metric_specs[] = {
      {"report", "Expressivity, entanglement and EPD per (template, qubits, layers)"},
      {"expr", "Expressivity only"},
      {"ent", "Entanglement capability only"},
      {"epd", "Effective parameter dimension only"},
  };
  for (const auto& [name, help] : metric_specs) {
    auto* sub = app.add_subcommand(name, help);
    add_metric_options(sub, metric_args[name], std::string_view(name) == "ent");
    metric_cmds[name] = sub;
  }

  BlochArgs bloch;
  auto* bloch_cmd = app.add_subcommand("bloch", "Bloch-vector samples of a single calibrated-length pulse");
  bloch_cmd->add_option("--sweep", bloch.sweep, "amplitude or angle")
      ->required()
      ->check(CLI::IsMember({"amplitude", "angle"}));
  bloch_cmd->add_option("--samples", bloch.samples, "Number of samples");
  bloch_cmd->add_option("--amplitude", bloch.amplitude, "Fixed amplitude for the angle sweep");
  bloch_cmd->add_option("--seed", bloch.seed, "Random seed");
  bloch_cmd->add_option("--device", bloch.device, "Device JSON file");
  bloch_cmd->add_option("--backend", bloch.backend, "Constraint table entry");
  bloch_cmd->add_option("--out,-o", bloch.out, "Output CSV file (default: stdout)");

  VqeArgs vqe;
  auto* vqe_cmd = app.add_subcommand("vqe", "Variational ground-state search");
  vqe_cmd->add_option("--hamiltonian", vqe.hamiltonian, "Pauli Hamiltonian file");
  vqe_cmd->add_option("--portfolio", vqe.portfolio, "Portfolio JSON file");
  vqe_cmd->add_option("--template,-t", vqe.template_name, "Template id/name or gate baseline");
  vqe_cmd->add_option("--layers,-l", vqe.layers, "Template layers");
  vqe_cmd->add_option("--optimizer", vqe.optimizer, "spsa or nelder-mead");
  vqe_cmd->add_option("--iterations", vqe.iterations, "Iterations per restart");
  vqe_cmd->add_option("--restarts", vqe.restarts, "Independent starts; the best is kept");
  vqe_cmd->add_option("--spsa-a", vqe.gains.a, "SPSA a");
  vqe_cmd->add_option("--spsa-c", vqe.gains.c, "SPSA c");
  vqe_cmd->add_option("--spsa-A", vqe.gains.stability, "SPSA stability constant A");
  vqe_cmd->add_option("--spsa-alpha", vqe.gains.alpha, "SPSA alpha");
  vqe_cmd->add_option("--spsa-gamma", vqe.gains.gamma, "SPSA gamma");
  vqe_cmd->add_option("--seed", vqe.seed, "Random seed");
  vqe_cmd->add_option("--baseline", vqe.baseline, "Gate baseline for the duration comparison");
  vqe_cmd->add_option("--baseline-reps", vqe.baseline_reps, "Repetitions of the baseline circuit");
  vqe_cmd->add_option("--device", vqe.device, "Device JSON file");
  vqe_cmd->add_option("--backend", vqe.backend, "Constraint table entry");
  vqe_cmd->add_option("--out,-o", vqe.out, "Output directory (default: summary on stdout)");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule file against a backend's constraints");
  validate_cmd->add_option("schedule,--schedule", validate.schedule, "Schedule JSON file")->required();
  validate_cmd->add_option("--backend", validate.backend, "Constraint table entry");
  validate_cmd->add_option("--out,-o", validate.out, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    set_worker_count(threads);
    for (const auto& [name, sub] : metric_cmds) {
      if (sub->parsed()) return cmd_metrics(name, metric_args[name], out, err);
    }
    if (bloch_cmd->parsed()) return cmd_bloch(bloch, out, err);
    if (vqe_cmd->parsed()) return cmd_vqe(vqe, out, err);
    if (validate_cmd->parsed()) return cmd_validate(validate, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace pulseforge::cli
