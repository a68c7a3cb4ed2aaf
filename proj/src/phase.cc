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

#include "fusionchain/phase.h"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fusionchain {

std::complex<double> Phase::value() const {
    if (num == 0) {
        return {1.0, 0.0};
    }
    if (2 * num == den) {
        return {-1.0, 0.0};
    }
    if (4 * num == den) {
        return {0.0, 1.0};
    }
    if (4 * num == 3 * den) {
        return {0.0, -1.0};
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

std::string Phase::str() const {
    if (num == 0) {
        return "1";
    }
    std::ostringstream out;
    out << "e^(2pi i " << num << "/" << den << ")";
    return out.str();
}

}  // namespace fusionchain
