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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pulseforge/metrics/expressivity.hpp"

namespace pulseforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

std::string_view tool_version();

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

// Parses "3", "2-4" or "2,3,5" into a sorted list without duplicates.
// Throws DomainError on malformed input.
std::vector<int> parse_int_range(std::string_view text);

// Entry point behind the pulseforge executable. Subcommands: bloch, report,
// expr, ent, epd, vqe, validate. Returns one of the kExit* codes.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Fidelity histogram as a density plot with the Haar curve for 2^n_qubits
// overlaid. Self-contained SVG text.
std::string render_histogram_svg(const metrics::FidelityHistogram& h, int n_qubits, const std::string& title);

}  // namespace pulseforge::cli
