// Copyright 2026 The zkit Authors
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

// JSON encodings shared by the CLI and the file-based interfaces. A state is
// {"dim": n, "amplitudes": [[re, im], ...]} and an operator is
// {"dim": n, "entries": [[re, im], ...]} in row-major order.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "zkit/linalg.hpp"
#include "zkit/representation.hpp"

namespace zkit::io {

using Json = nlohmann::json;

Json state_to_json(const StateVector& psi);
/// Throws ParseError on malformed input.
StateVector state_from_json(const Json& j);

Json operator_to_json(const Operator& u);
Operator operator_from_json(const Json& j);

/// [alpha, beta, gamma, delta].
Json to_json(const SymplecticMatrix& g);
Json to_json(const CliffordElement& c);
Json to_json(const ProjectivePoint& z);

Json read_json_file(const std::filesystem::path& path);
/// Writes j with two-space indentation and a trailing newline, creating parent
/// directories as needed.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace zkit::io
