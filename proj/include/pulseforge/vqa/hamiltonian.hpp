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

#include <string>
#include <string_view>

#include "pulseforge/qcore/pauli.hpp"
#include "pulseforge/qcore/state.hpp"

namespace pulseforge::vqa {

using qcore::PauliHamiltonian;
using qcore::PauliTerm;

// One `<coefficient> <label>` pair per line; `#` starts a comment. Labels are
// upper-cased and duplicate labels summed, keeping first-seen order. Throws
// ParseError with the line number on bad input.
PauliHamiltonian parse_hamiltonian(std::string_view text);
PauliHamiltonian load_hamiltonian(const std::string& path);

std::string serialize_hamiltonian(const PauliHamiltonian& h);

// sum_k c_k <psi|P_k|psi>. Throws DimensionError on a qubit-count mismatch.
double expectation(const qcore::StateVector& state, const PauliHamiltonian& h);

}  // namespace pulseforge::vqa
