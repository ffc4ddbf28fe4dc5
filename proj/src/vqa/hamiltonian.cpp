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

#include "pulseforge/vqa/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "pulseforge/common/error.hpp"

namespace pulseforge::vqa {

PauliHamiltonian parse_hamiltonian(std::string_view text) {
  PauliHamiltonian h;
  std::unordered_map<std::string, std::size_t> index;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string coef_text;
    std::string label;
    if (!(fields >> coef_text)) continue;
    if (!(fields >> label)) throw ParseError(fmt::format("line {}: expected `<coefficient> <label>`", line_no));
    std::string extra;
    if (fields >> extra) throw ParseError(fmt::format("line {}: unexpected token \"{}\"", line_no, extra));

    double coef = 0.0;
    try {
      std::size_t used = 0;
      coef = std::stod(coef_text, &used);
      if (used != coef_text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError(fmt::format("line {}: bad coefficient \"{}\"", line_no, coef_text));
    }
    if (!std::isfinite(coef)) throw ParseError(fmt::format("line {}: non-finite coefficient", line_no));

    std::transform(label.begin(), label.end(), label.begin(), [](unsigned char c) { return std::toupper(c); });
    if (label.find_first_not_of("IXYZ") != std::string::npos) {
      throw ParseError(fmt::format("line {}: bad Pauli label \"{}\"", line_no, label));
    }
    if (h.terms.empty()) {
      h.n_qubits = static_cast<int>(label.size());
    } else if (static_cast<int>(label.size()) != h.n_qubits) {
      throw ParseError(fmt::format("line {}: inconsistent label length {} (expected {})", line_no, label.size(),
                                   h.n_qubits));
    }
    if (const auto it = index.find(label); it != index.end()) {
      h.terms[it->second].coefficient += coef;
    } else {
      index.emplace(label, h.terms.size());
      h.terms.push_back({coef, label});
    }
  }
  if (h.terms.empty()) throw ParseError("Hamiltonian has no terms");
  return h;
}

PauliHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open Hamiltonian file {}", path));
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_hamiltonian(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

std::string serialize_hamiltonian(const PauliHamiltonian& h) {
  std::string out;
  for (const auto& t : h.terms) out += fmt::format("{:+.12f} {}\n", t.coefficient, t.label);
  return out;
}

double expectation(const qcore::StateVector& state, const PauliHamiltonian& h) {
  if (state.n_qubits() != h.n_qubits) {
    throw DimensionError(fmt::format("state has {} qubits, Hamiltonian {}", state.n_qubits(), h.n_qubits));
  }
  double e = 0.0;
  for (const auto& t : h.terms) e += t.coefficient * qcore::pauli_expectation(state, t.label);
  return e;
}

}  // namespace pulseforge::vqa
