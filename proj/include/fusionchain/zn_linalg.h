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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fusionchain {

/// Dense matrix over Z_n.
class ZnMatrix {
   public:
    ZnMatrix() = default;
    ZnMatrix(int modulus, int rows, int cols);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static ZnMatrix from_columns(int modulus, int rows, const std::vector<std::vector<int>> &columns);

    int modulus() const {
        return n_;
    }
    int rows() const {
        return rows_;
    }
    int cols() const {
        return cols_;
    }
    int at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    void set(int r, int c, long long v);
    std::vector<int> column(int c) const;
    std::vector<std::vector<int>> columns() const;

    ZnMatrix operator*(const ZnMatrix &other) const;
    std::vector<int> apply(const std::vector<int> &v) const;
    ZnMatrix transpose() const;
    /// Horizontal concatenation [A | B].
    ZnMatrix hcat(const ZnMatrix &other) const;

   private:
    int n_ = 1;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

/// Diagonalization U A V = D with U, V invertible over Z_n.
struct SmithForm {
    ZnMatrix U;
    ZnMatrix V;
    /// Diagonal entries d_0..d_{r-1} (nonzero mod n); all later entries vanish.
    std::vector<int> diag;
};

SmithForm smith_form(const ZnMatrix &a);

/// Exact positive integer kept as a prime factorization, so that large
/// subgroup orders and their ratios never overflow.
class ExactOrder {
   public:
    ExactOrder() = default;
    static ExactOrder of(long long value);
    static ExactOrder power(long long base, int exponent);

    ExactOrder operator*(const ExactOrder &other) const;
    ExactOrder operator/(const ExactOrder &other) const;
    bool operator==(const ExactOrder &other) const {
        return primes_ == other.primes_;
    }
    bool operator!=(const ExactOrder &other) const {
        return !(*this == other);
    }
    /// True if this is an integer (no negative prime exponents).
    bool is_integer() const;
    /// True if this is the square of a rational.
    bool is_square() const;
    ExactOrder sqrt() const;
    double to_double() const;
    double log() const;
    /// Exact value if it fits in an int64 and is integral.
    std::optional<long long> to_int() const;
    std::string str() const;
    const std::map<long long, int> &primes() const {
        return primes_;
    }

   private:
    std::map<long long, int> primes_;
};

/// Order of the subgroup of Z_n^rows generated by the columns of `gens`.
ExactOrder span_order(const ZnMatrix &gens);

/// Some y with gens * y == v (mod n), if one exists.
std::optional<std::vector<int>> zn_solve(const ZnMatrix &gens, const std::vector<int> &v);

inline bool in_span(const ZnMatrix &gens, const std::vector<int> &v) {
    return zn_solve(gens, v).has_value();
}

/// Columns generate {y : a * y == 0 (mod n)}.
ZnMatrix zn_kernel(const ZnMatrix &a);

/// Columns generate span(A) ∩ span(B).
ZnMatrix span_intersection(const ZnMatrix &a, const ZnMatrix &b);

/// True iff span(A) ⊆ span(B).
bool span_contains(const ZnMatrix &b, const ZnMatrix &a);

}  // namespace fusionchain
