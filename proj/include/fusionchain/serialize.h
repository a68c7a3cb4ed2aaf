// Copyright 2026 The fusionchain Authors
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

#include <json.hpp>
#include <string>

#include "fusionchain/center.h"
#include "fusionchain/duality.h"
#include "fusionchain/index.h"

namespace fusionchain {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Parses a JSON document; SchemaError carries line:column of syntax errors.
Json parse_json(const std::string &text, const std::string &source = "<input>");
Json load_json_file(const std::string &path);

Json to_json(const Phase &p);
Json to_json(const PauliString &p);
PauliString pauli_from_json(const Json &j, int n, const std::string &where = "");

Json to_json(const DualitySpec &spec);
/// Schema checks, then the symmetry invariant of each image (InvariantViolation).
DualitySpec duality_from_json(const Json &j);
DualitySpec load_duality(const std::string &path);

Json to_json(const FiniteAbelianGroup &g);
FiniteAbelianGroup group_from_json(const Json &j);
FiniteAbelianGroup load_group(const std::string &path);

Json to_json(const AnyonSystem &sys);
Json to_json(const AnyonSystem &sys, const LagrangianAlgebra &l);
Json to_json(const AnyonSystem &sys, const BraidedAutoEq &b);
Json to_json(const ExtensionTable &e);
ExtensionTable extension_from_json(const Json &j);
Json to_json(const ExtensionVerdict &v, const AnyonSystem &sys);
Json to_json(const DualityReport &r);
Json to_json(const TracedInclusion &inc);
TracedInclusion inclusion_from_json(const Json &j);
Json to_json(const IndexEstimate &e);

}  // namespace fusionchain
