// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON artifacts: state files, scheme files and command reports.
//
// State file: {"n_qubits": N, "matrix_re": [[...]], "matrix_im": [[...]]}, rows
// of the 2^N x 2^N density matrix. Doubles are written in shortest round-trip
// form, so parsing a written file reproduces the state bit for bit.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "boundent/diagnostics.hpp"
#include "boundent/optics.hpp"

namespace boundent::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json state_to_json(const DensityMatrix& rho);
// Throws InvariantViolation: "format" for schema problems, else the
// density-matrix invariant that failed (hermiticity, trace, psd).
DensityMatrix state_from_json(const Json& doc);

Json scheme_to_json(const MixingScheme& scheme);
MixingScheme scheme_from_json(const Json& doc);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

Json parse_json(std::string_view text, std::string_view what);
// Pretty-printed with a trailing newline.
std::string dump(const Json& doc);

std::string sha256_hex(std::string_view bytes);

// "1,2" -> cut with group A = {1, 2}.
Bipartition parse_cut(int n_qubits, std::string_view spec);
// Sorted group-A qubits of the canonical cut.
Json cut_to_json(const Bipartition& cut);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::optional<std::string> verdict;
  std::optional<std::uint64_t> seed;

  Json to_json() const;
};

}  // namespace boundent::io
