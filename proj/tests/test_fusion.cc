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

#include "fusionchain/fusion.h"

#include <gtest/gtest.h>

#include <cmath>

#include "fusionchain/errors.h"
#include "oracles.h"

using namespace fusionchain;

namespace {

FusionCategorySpec ty(std::vector<int> factors, int sign) {
    FiniteAbelianGroup g(std::move(factors));
    return tambara_yamagami(g, standard_bicharacter(g).chi, sign);
}

}  // namespace

TEST(pointed, labels_and_fusion) {
    auto z2 = pointed_category(FiniteAbelianGroup::cyclic(2));
    EXPECT_EQ(z2.labels, (std::vector<std::string>{"1", "g"}));
    EXPECT_EQ(z2.N[1][1][0], 1);
    auto z3 = pointed_category(FiniteAbelianGroup::cyclic(3));
    EXPECT_EQ(z3.rank(), 3);
    EXPECT_EQ(z3.N[1][2][0], 1);
    EXPECT_EQ(z3.N[1][1][2], 1);
    auto rep = rep_category(FiniteAbelianGroup::cyclic(2));
    EXPECT_EQ(rep.rank(), 2);
    EXPECT_EQ(rep.N[1][1][0], 1);
    for (auto &s : {z2, z3, rep}) {
        EXPECT_NO_THROW(validate_category(s));
        EXPECT_EQ(associativity_defect(s), 0);
    }
}

TEST(tambara_yamagami, dimensions) {
    auto t2 = ty({2}, 1);
    EXPECT_EQ(t2.rank(), 3);
    EXPECT_NEAR(t2.qdims[2], std::sqrt(2.0), 1e-15);
    auto t3 = ty({3}, 1);
    EXPECT_EQ(t3.rank(), 4);
    EXPECT_NEAR(t3.qdims[3], std::sqrt(3.0), 1e-15);
    auto qd = quantum_dims(t3);
    EXPECT_NEAR(qd[3], std::sqrt(3.0), 1e-12);
    auto q2 = quantum_dims(t2);
    EXPECT_NEAR(q2[0], 1.0, 1e-12);
    EXPECT_NEAR(q2[1], 1.0, 1e-12);
    EXPECT_NEAR(q2[2], std::sqrt(2.0), 1e-12);
}

TEST(tambara_yamagami, pentagon_both_signs) {
    for (auto f : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {5}, {2, 4}, {8}, {2, 2, 2}}) {
        for (int sign : {1, -1}) {
            auto s = ty(f, sign);
            EXPECT_LT(pentagon_residual(s), 1e-10) << s.name;
            EXPECT_NO_THROW(validate_category(s));
        }
    }
}

TEST(tambara_yamagami, perturbed_table_fails_pentagon) {
    auto s = ty({3}, 1);
    auto t = s;
    for (auto &[k, v] : t.ftable) {
        if (k[0] == 3 && k[1] == 3 && k[2] == 3) {
            v.phase = v.phase.inverse();
        }
    }
    EXPECT_GT(pentagon_residual(t), 1e-3);
    for (auto &[k, v] : s.ftable) {
        if (k[0] == 3 && k[1] == 3 && k[2] == 3 && k[4] == 0 && k[5] == 0) {
            v.scale = -v.scale;
        }
    }
    EXPECT_GT(pentagon_residual(s), 1e-3);
    EXPECT_THROW(validate_category(s), InvariantViolation);
}

TEST(tambara_yamagami, grading_respected) {
    auto s = ty({2, 2}, -1);
    for (int a = 0; a < s.rank(); a++) {
        for (int b = 0; b < s.rank(); b++) {
            for (int c = 0; c < s.rank(); c++) {
                if (s.N[a][b][c]) {
                    EXPECT_EQ((s.grading[a] + s.grading[b]) % 2, s.grading[c]);
                }
            }
        }
    }
}

TEST(tambara_yamagami, invalid_bicharacter) {
    FiniteAbelianGroup k({2, 2});
    EXPECT_THROW(tambara_yamagami(k, Bicharacter(k, {{1, 0}, {0, 0}}), 1), InvalidBicharacter);
    EXPECT_THROW(tambara_yamagami(k, Bicharacter(k, {{1, 1}, {0, 1}}), 1), InvalidBicharacter);
}

TEST(fibonacci, dims_and_pentagon) {
    auto fib = fibonacci_category();
    auto d = quantum_dims(fib);
    EXPECT_NEAR(d[1], (1 + std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_LT(pentagon_residual(fib), 1e-12);
    EXPECT_NO_THROW(validate_category(fib));
    auto is = ising_category();
    EXPECT_LT(pentagon_residual(is), 1e-12);
}

TEST(decompose, vec_z2_cube) {
    auto z2 = pointed_category(FiniteAbelianGroup::cyclic(2));
    auto x = ObjectExpr::sum(2, {0, 1});
    auto m = power_decompose(z2, x, 3);
    EXPECT_EQ(m.mult, (std::vector<int>{4, 4}));
    EXPECT_EQ(end_dimension(m), 32);
    auto paths = oracle::path_count_multiplicities(z2, x, 3);
    EXPECT_EQ(paths, (std::vector<long long>{4, 4}));
}

TEST(decompose, unit_power) {
    auto t = ty({3}, 1);
    auto m = power_decompose(t, ObjectExpr::simple(4, 3), 0);
    EXPECT_EQ(m, ObjectExpr::unit(4));
    EXPECT_EQ(end_dimension(m), 1);
}

TEST(decompose, rho_squared) {
    auto t = ty({2}, 1);
    auto rho = ObjectExpr::simple(3, 2);
    EXPECT_EQ(tensor_decompose(t, rho, rho).mult, (std::vector<int>{1, 1, 0}));
}

TEST(decompose, successive_powers_consistent) {
    std::vector<std::pair<FusionCategorySpec, ObjectExpr>> cases{
        {pointed_category(FiniteAbelianGroup::cyclic(3)), ObjectExpr::sum(3, {0, 1, 2})},
        {ty({2}, 1), ObjectExpr::simple(3, 2)},
        {fibonacci_category(), ObjectExpr::simple(2, 1)},
        {ty({3}, -1), ObjectExpr::sum(4, {1, 3})},
    };
    for (auto &[spec, x] : cases) {
        for (int n = 0; n < 10; n++) {
            auto m = power_decompose(spec, x, n);
            auto m1 = power_decompose(spec, x, n + 1);
            long long expect = 0;
            for (int c = 0; c < spec.rank(); c++) {
                long long s = 0;
                for (int b = 0; b < spec.rank(); b++) {
                    for (int a = 0; a < spec.rank(); a++) {
                        s += static_cast<long long>(m.mult[b]) * x.mult[a] * spec.N[b][a][c];
                    }
                }
                expect += s * s;
            }
            EXPECT_EQ(end_dimension(m1), expect);
            if (n <= 6) {
                auto paths = oracle::path_count_multiplicities(spec, x, n);
                for (int c = 0; c < spec.rank(); c++) {
                    EXPECT_EQ(m.mult[c], paths[c]);
                }
            }
        }
    }
}

TEST(strong_generator, examples) {
    auto z2 = pointed_category(FiniteAbelianGroup::cyclic(2));
    auto a = is_strong_generator(ObjectExpr::sum(2, {0, 1}), z2);
    EXPECT_TRUE(a.generating);
    EXPECT_EQ(a.power, 1);
    auto b = is_strong_generator(ObjectExpr::simple(2, 1), z2);
    EXPECT_FALSE(b.generating);
    auto t = ty({2}, 1);
    auto c = is_strong_generator(ObjectExpr::simple(3, 2), t);
    EXPECT_TRUE(c.generating);
    EXPECT_EQ(c.power, 2);
    auto fib = fibonacci_category();
    auto d = is_strong_generator(ObjectExpr::simple(2, 1), fib);
    EXPECT_TRUE(d.generating);
    EXPECT_EQ(d.power, 2);
}

TEST(modules, regular_and_fiber) {
    auto z2 = pointed_category(FiniteAbelianGroup::cyclic(2));
    auto reg = regular_module(z2);
    EXPECT_TRUE(reg.is_associative(z2));
    EXPECT_TRUE(reg.is_indecomposable());
    auto rep = rep_category(FiniteAbelianGroup::cyclic(2));
    auto fib = fiber_functor_module(rep);
    EXPECT_TRUE(fib.is_associative(rep));
    EXPECT_EQ(fib.rank(), 1);
    auto t = ty({2}, 1);
    EXPECT_TRUE(regular_module(t).is_associative(t));
    EXPECT_THROW(fiber_functor_module(t), UnsupportedSystem);
}

TEST(quantum_dims, non_associative_rejected) {
    auto s = pointed_category(FiniteAbelianGroup::cyclic(3));
    s.N[1][1][2] = 0;
    s.N[1][1][0] = 1;
    EXPECT_THROW(quantum_dims(s), NonAssociative);
}
