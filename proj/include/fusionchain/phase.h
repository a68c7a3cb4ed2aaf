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

#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

namespace fusionchain {

/// An exact root of unity exp(2*pi*i * num/den), kept in lowest terms with
/// 0 <= num < den.
struct Phase {
    int64_t num = 0;
    int64_t den = 1;

    constexpr Phase() = default;
    Phase(int64_t k, int64_t n) : num(k), den(n) {
        normalize();
    }

    static Phase one() {
        return Phase();
    }
    static Phase minus_one() {
        return Phase(1, 2);
    }

    bool is_one() const {
        return num == 0;
    }

    Phase operator*(const Phase &other) const {
        int64_t l = std::lcm(den, other.den);
        return Phase(num * (l / den) + other.num * (l / other.den), l);
    }
    Phase inverse() const {
        return Phase(-num, den);
    }
    Phase pow(int64_t k) const {
        return Phase(num * k, den);
    }
    bool operator==(const Phase &other) const {
        return num == other.num && den == other.den;
    }
    bool operator!=(const Phase &other) const {
        return !(*this == other);
    }
    bool operator<(const Phase &other) const {
        return num * other.den < other.num * den;
    }

    std::complex<double> value() const;
    /// Order of the root of unity (den after reduction).
    int64_t order() const {
        return den;
    }
    std::string str() const;

   private:
    void normalize() {
        if (den < 0) {
            den = -den;
            num = -num;
        }
        num %= den;
        if (num < 0) {
            num += den;
        }
        int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) {
            den = 1;
        }
    }
};

}  // namespace fusionchain
