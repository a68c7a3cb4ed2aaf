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

#include <ostream>
#include <string>
#include <vector>

#include "fusionchain/duality.h"
#include "fusionchain/serialize.h"

namespace fusionchain {

enum ExitCode { kExitPass = 0, kExitNegative = 1, kExitError = 2 };

/// Runs one subcommand; args exclude the program name. Returns the exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// A file path, or a builtin name: kw<n>, identity<n>, shift<n>, conj<n>, and a*b for composition.
DualitySpec resolve_duality(const std::string &text);
/// A file path, or a group string such as Z2xZ2.
FiniteAbelianGroup resolve_group(const std::string &text);
/// "3..7" or "3,4,5".
std::vector<int> parse_scales(const std::string &text);

}  // namespace fusionchain
