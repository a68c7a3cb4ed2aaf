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

#include "fusionchain/zn_linalg.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

using namespace fusionchain;

namespace {

ZnMatrix random_matrix(std::mt19937 &rng, int n, int rows, int cols) {
    ZnMatrix m(n, rows, cols);
    std::uniform_int_distribution<int> d(0, n - 1);
    std::uniform_int_distribution<int> sparse(0, 2);
    for (int i = 0; i < rows; i++) {
        for (int j = 0; j < cols; j++) {
            m.set(i, j, sparse(rng) == 0 ? 0 : d(rng));
        }
    }
    return m;
}

}  // namespace

TEST(zn_linalg, span_order_matches_closure) {
    std::mt19937 rng(7);
    for (int n : {2, 3, 4, 6, 8, 9, 12}) {
        for (int trial = 0; trial < 25; trial++) {
            int rows = 1 + trial % 4, cols = 1 + (trial * 7) % 5;
            auto m = random_matrix(rng, n, rows, cols);
            auto span = oracle::brute_span(n, m.columns(), rows);
            EXPECT_EQ(span_order(m).to_int().value(), static_cast<long long>(span.size())) << "n=" << n;
        }
    }
}

TEST(zn_linalg, smith_form_diagonalizes) {
    std::mt19937 rng(11);
    for (int n : {4, 6, 12}) {
        for (int trial = 0; trial < 20; trial++) {
            auto m = random_matrix(rng, n, 3, 4);
            auto sf = smith_form(m);
            auto d = sf.U * m * sf.V;
            for (int i = 0; i < d.rows(); i++) {
                for (int j = 0; j < d.cols(); j++) {
                    if (i == j && i < static_cast<int>(sf.diag.size())) {
                        EXPECT_EQ(d.at(i, j), sf.diag[i]);
                    } else {
                        EXPECT_EQ(d.at(i, j), 0);
                    }
                }
            }
        }
    }
}

TEST(zn_linalg, solve_and_membership) {
    std::mt19937 rng(3);
    for (int n : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 20; trial++) {
            auto m = random_matrix(rng, n, 3, 3);
            auto span = oracle::brute_span(n, m.columns(), 3);
            for (int idx = 0; idx < n * n * n; idx++) {
                std::vector<int> v{idx % n, (idx / n) % n, idx / (n * n)};
                auto y = zn_solve(m, v);
                EXPECT_EQ(y.has_value(), span.count(v) == 1);
                if (y) {
                    EXPECT_EQ(m.apply(*y), v);
                }
            }
        }
    }
}

TEST(zn_linalg, kernel_matches_brute_force) {
    std::mt19937 rng(5);
    for (int n : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 20; trial++) {
            auto m = random_matrix(rng, n, 2, 3);
            auto k = zn_kernel(m);
            long long count = 0;
            for (int idx = 0; idx < n * n * n; idx++) {
                std::vector<int> y{idx % n, (idx / n) % n, idx / (n * n)};
                auto r = m.apply(y);
                if (r[0] == 0 && r[1] == 0) {
                    count++;
                    EXPECT_TRUE(in_span(k, y));
                }
            }
            for (auto &c : k.columns()) {
                auto r = m.apply(c);
                EXPECT_EQ(r, (std::vector<int>{0, 0}));
            }
            EXPECT_EQ(span_order(k).to_int().value(), count);
        }
    }
}

TEST(zn_linalg, intersection_matches_sets) {
    std::mt19937 rng(9);
    for (int n : {2, 3, 4, 6}) {
        for (int trial = 0; trial < 20; trial++) {
            auto a = random_matrix(rng, n, 3, 2);
            auto b = random_matrix(rng, n, 3, 2);
            auto sa = oracle::brute_span(n, a.columns(), 3);
            auto sb = oracle::brute_span(n, b.columns(), 3);
            long long common = 0;
            for (auto &v : sa) {
                common += sb.count(v);
            }
            auto i = span_intersection(a, b);
            EXPECT_EQ(span_order(i).to_int().value(), common);
            EXPECT_TRUE(span_contains(a, i));
            EXPECT_TRUE(span_contains(b, i));
        }
    }
}

TEST(exact_order, arithmetic) {
    auto a = ExactOrder::power(2, 10) / ExactOrder::power(2, 7);
    EXPECT_EQ(a.to_int().value(), 8);
    EXPECT_FALSE(a.is_square());
    EXPECT_NEAR(a.to_double(), 8.0, 1e-12);
    auto b = ExactOrder::of(36).sqrt();
    EXPECT_EQ(b.to_int().value(), 6);
    auto c = ExactOrder::of(3) / ExactOrder::of(9);
    EXPECT_FALSE(c.is_integer());
    EXPECT_EQ(c.str(), "1/3");
    EXPECT_NEAR(ExactOrder::power(3, 200).log(), 200 * std::log(3.0), 1e-9);
}
