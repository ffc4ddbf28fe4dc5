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

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "pulseforge/cli/cli.hpp"
#include "pulseforge/metrics/haar.hpp"

namespace pulseforge::cli {
namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_histogram_svg(const metrics::FidelityHistogram& h, int n_qubits, const std::string& title) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 400.0;
  constexpr double kLeft = 60.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 50.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t bins = std::max<std::size_t>(h.bins(), 1);
  const double bin_w = 1.0 / static_cast<double>(bins);
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;

  std::vector<double> density(bins, 0.0);
  for (std::size_t b = 0; b < h.bins() && h.n_samples > 0; ++b) {
    density[b] = static_cast<double>(h.counts[b]) / static_cast<double>(h.n_samples) / bin_w;
  }
  constexpr int kCurvePoints = 200;
  std::vector<double> curve(kCurvePoints + 1);
  for (int i = 0; i <= kCurvePoints; ++i) {
    curve[static_cast<std::size_t>(i)] = metrics::haar_pdf(static_cast<double>(i) / kCurvePoints, dim);
  }
  double y_max = std::max(*std::max_element(density.begin(), density.end()),
                          *std::max_element(curve.begin(), curve.end()));
  y_max = y_max > 0.0 ? y_max * 1.05 : 1.0;
  auto px = [&](double f) { return kLeft + f * plot_w; };
  auto py = [&](double v) { return kTop + plot_h - std::min(v, y_max) / y_max * plot_h; };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight, kWidth, kHeight);
  svg += fmt::format("<rect width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, kHeight);
  svg += fmt::format("<text x=\"{:.1f}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                     kWidth / 2.0, xml_escape(title));
  svg += "<g fill=\"#4c78a8\" fill-opacity=\"0.75\">\n";
  for (std::size_t b = 0; b < bins; ++b) {
    const double x0 = px(static_cast<double>(b) * bin_w);
    const double y0 = py(density[b]);
    svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\"/>\n", x0, y0,
                       plot_w * bin_w, kTop + plot_h - y0);
  }
  svg += "</g>\n<polyline fill=\"none\" stroke=\"#e45756\" stroke-width=\"2\" points=\"";
  for (int i = 0; i <= kCurvePoints; ++i) {
    svg += fmt::format("{}{:.2f},{:.2f}", i == 0 ? "" : " ", px(static_cast<double>(i) / kCurvePoints),
                       py(curve[static_cast<std::size_t>(i)]));
  }
  svg += "\"/>\n";
  svg += fmt::format(
      "<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n"
      "<line x1=\"{0:.1f}\" y1=\"{3:.1f}\" x2=\"{0:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n",
      kLeft, kTop + plot_h, kLeft + plot_w, kTop);
  for (int t = 0; t <= 5; ++t) {
    const double f = t / 5.0;
    svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.1f}</text>\n", px(f),
                       kTop + plot_h + 16.0, f);
  }
  svg += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">fidelity</text>\n", kLeft + plot_w / 2,
                     kHeight - 12.0);
  svg += fmt::format(
      "<text x=\"16\" y=\"{:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1f})\">density (max "
      "{:.3g})</text>\n",
      kTop + plot_h / 2, kTop + plot_h / 2, y_max);
  svg += fmt::format(
      "<g font-size=\"11\"><rect x=\"{0:.1f}\" y=\"{1:.1f}\" width=\"12\" height=\"12\" fill=\"#4c78a8\"/>"
      "<text x=\"{2:.1f}\" y=\"{3:.1f}\">sampled ({4} pairs)</text>"
      "<line x1=\"{0:.1f}\" y1=\"{5:.1f}\" x2=\"{6:.1f}\" y2=\"{5:.1f}\" stroke=\"#e45756\" stroke-width=\"2\"/>"
      "<text x=\"{2:.1f}\" y=\"{7:.1f}\">Haar, dim {8}</text></g>\n",
      kLeft + plot_w - 150.0, kTop + 4.0, kLeft + plot_w - 132.0, kTop + 14.0, h.n_samples, kTop + 28.0,
      kLeft + plot_w - 138.0, kTop + 32.0, dim);
  svg += "</svg>\n";
  return svg;
}

}  // namespace pulseforge::cli
