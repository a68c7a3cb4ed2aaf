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

#include "fusionchain/center.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "fusionchain/errors.h"
#include "oracles.h"

using namespace fusionchain;

namespace {

std::set<std::string> names(const std::vector<LagrangianAlgebra> &ls) {
    std::set<std::string> out;
    for (auto &l : ls) {
        out.insert(l.name);
    }
    return out;
}

}  // namespace

TEST(double_of_abelian, toric_code) {
    auto d = double_of_abelian(FiniteAbelianGroup::cyclic(2));
    ASSERT_EQ(d.rank(), 4);
    EXPECT_EQ(d.twist[d.label_index("1")], Phase::one());
    EXPECT_EQ(d.twist[d.label_index("e")], Phase::one());
    EXPECT_EQ(d.twist[d.label_index("m")], Phase::one());
    EXPECT_EQ(d.twist[d.label_index("f")], Phase::minus_one());
    EXPECT_EQ(d.monodromy[d.label_index("e")][d.label_index("m")], Phase::minus_one());
    EXPECT_NEAR(d.global_dimension(), 4.0, 1e-14);
}

TEST(double_of_abelian, z3_twists) {
    auto A = FiniteAbelianGroup::cyclic(3);
    auto d = double_of_abelian(A);
    ASSERT_EQ(d.rank(), 9);
    for (int x = 0; x < 9; x++) {
        auto el = d.group->element(x);
        EXPECT_EQ(d.twist[x], Phase(el[0] * el[1], 3));
    }
    EXPECT_EQ(double_of_abelian(FiniteAbelianGroup()).rank(), 1);
}

TEST(double_of_abelian, quadratic_relation) {
    for (auto g : {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
        auto d = double_of_abelian(FiniteAbelianGroup::parse(g));
        const auto &G = *d.group;
        for (int x = 0; x < d.rank(); x++) {
            for (int y = 0; y < d.rank(); y++) {
                int xy = G.index_of(G.add(G.element(x), G.element(y)));
                EXPECT_EQ(d.monodromy[x][y], d.twist[xy] * d.twist[x].inverse() * d.twist[y].inverse()) << g;
                EXPECT_EQ(d.monodromy[x][y], d.monodromy[y][x]);
            }
        }
    }
}

TEST(lagrangian, examples_against_brute_force) {
    auto z2 = double_of_abelian(FiniteAbelianGroup::cyclic(2));
    auto l2 = lagrangian_algebras(z2);
    EXPECT_EQ(names(l2), (std::set<std::string>{"1+e", "1+m"}));
    EXPECT_EQ(oracle::brute_lagrangian_subsets(z2), 2);
    auto z3 = double_of_abelian(FiniteAbelianGroup::cyclic(3));
    EXPECT_EQ(lagrangian_algebras(z3).size(), 2u);
    EXPECT_EQ(oracle::brute_lagrangian_subsets(z3), 2);
    auto k = double_of_abelian(FiniteAbelianGroup({2, 2}));
    EXPECT_EQ(lagrangian_algebras(k).size(), 6u);
    EXPECT_EQ(oracle::brute_lagrangian_subsets(k), 6);
    EXPECT_EQ(lagrangian_algebras(double_of_abelian(FiniteAbelianGroup())).size(), 1u);
    for (auto g : {"Z4", "Z5", "Z6"}) {
        auto d = double_of_abelian(FiniteAbelianGroup::parse(g));
        EXPECT_EQ(static_cast<int>(lagrangian_algebras(d).size()), oracle::brute_lagrangian_subsets(d)) << g;
    }
}

TEST(lagrangian, electric_and_magnetic) {
    auto z2 = double_of_abelian(FiniteAbelianGroup::cyclic(2));
    EXPECT_EQ(electric_algebra(z2).name, "1+e");
    EXPECT_EQ(magnetic_algebra(z2).name, "1+m");
    EXPECT_EQ(lagrangian_by_name(z2, "1+m"), magnetic_algebra(z2));
    EXPECT_THROW(lagrangian_by_name(z2, "1+f"), InvalidArgument);
    for (auto &l : lagrangian_algebras(z2)) {
        EXPECT_EQ(torsor_size(z2, l), 2);
        EXPECT_NEAR(l.dimension, 2.0, 1e-14);
    }
    auto z3 = double_of_abelian(FiniteAbelianGroup::cyclic(3));
    EXPECT_EQ(torsor_size(z3, electric_algebra(z3)), 3);
    auto triv = double_of_abelian(FiniteAbelianGroup());
    EXPECT_EQ(torsor_size(triv, lagrangian_algebras(triv)[0]), 1);
}

TEST(lagrangian, invariant_under_generator_relabeling) {
    // Z6 = Z2 x Z3 presented two ways; the Lagrangian count is presentation independent
    auto a = double_of_abelian(FiniteAbelianGroup::parse("Z6"));
    auto b = double_of_abelian(FiniteAbelianGroup::parse("Z2xZ3"));
    EXPECT_EQ(lagrangian_algebras(a).size(), lagrangian_algebras(b).size());
    // relabel A = Z3 by a -> 2a: induced map on A x dual(A) is (a,f) -> (2a, 2f)
    auto d = double_of_abelian(FiniteAbelianGroup::cyclic(3));
    const auto &G = *d.group;
    std::set<std::vector<int>> orig, relabeled;
    for (auto &l : lagrangian_algebras(d)) {
        orig.insert(l.support());
        std::vector<int> s;
        for (int x : l.support()) {
            s.push_back(G.index_of(G.scale(G.element(x), 2)));
        }
        std::sort(s.begin(), s.end());
        relabeled.insert(s);
    }
    EXPECT_EQ(orig, relabeled);
}

TEST(braided_autoequivalences, examples_against_brute_force) {
    auto z2 = double_of_abelian(FiniteAbelianGroup::cyclic(2));
    auto b2 = braided_autoequivalences(z2);
    EXPECT_EQ(b2.size(), 2u);
    EXPECT_EQ(oracle::brute_braided_autoequivalences(z2), 2);
    auto swap = alpha_chi(standard_bicharacter(FiniteAbelianGroup::cyclic(2)).chi);
    EXPECT_NE(std::find(b2.begin(), b2.end(), swap), b2.end());
    EXPECT_EQ(swap.perm[z2.label_index("e")], z2.label_index("m"));
    EXPECT_EQ(swap.perm[z2.label_index("f")], z2.label_index("f"));

    auto z3 = double_of_abelian(FiniteAbelianGroup::cyclic(3));
    EXPECT_EQ(braided_autoequivalences(z3).size(), 4u);
    EXPECT_EQ(oracle::brute_braided_autoequivalences(z3), 4);
    EXPECT_EQ(braided_autoequivalences(double_of_abelian(FiniteAbelianGroup())).size(), 1u);
}

TEST(braided_autoequivalences, closed_and_preserve_lagrangians) {
    for (auto g : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        auto d = double_of_abelian(FiniteAbelianGroup::parse(g));
        auto group = braided_autoequivalences(d);
        std::set<std::vector<int>> perms;
        for (auto &b : group) {
            perms.insert(b.perm);
        }
        auto ls = lagrangian_algebras(d);
        std::set<std::vector<int>> supports;
        for (auto &l : ls) {
            supports.insert(l.support());
        }
        for (auto &a : group) {
            for (auto &b : group) {
                EXPECT_TRUE(perms.count(a.after(b).perm));
            }
            for (auto &l : ls) {
                auto img = a.apply(l).support();
                EXPECT_TRUE(is_lagrangian_subgroup(d, img));
                EXPECT_TRUE(supports.count(img));
            }
        }
    }
    EXPECT_EQ(braided_autoequivalences(double_of_abelian(FiniteAbelianGroup({2, 2}))).size(), 72u);
}

TEST(braided_autoequivalences, cap) {
    EXPECT_THROW(braided_autoequivalences(double_of_abelian(FiniteAbelianGroup::cyclic(9))), CapExceeded);
    EXPECT_THROW(braided_autoequivalences(fibonacci_double()), UnsupportedSystem);
}

TEST(alpha_chi, swaps_and_squares) {
    auto z3 = FiniteAbelianGroup::cyclic(3);
    auto d3 = double_of_abelian(z3);
    auto a3 = alpha_chi(standard_bicharacter(z3).chi);
    EXPECT_EQ(a3.apply(electric_algebra(d3)).support(), magnetic_algebra(d3).support());
    EXPECT_EQ(a3.apply(magnetic_algebra(d3)).support(), electric_algebra(d3).support());

    auto a2 = alpha_chi(standard_bicharacter(FiniteAbelianGroup::cyclic(2)).chi);
    EXPECT_TRUE(a2.after(a2).is_identity());
    for (auto g : {"Z2", "Z3", "Z4", "Z5", "Z2xZ2", "Z2xZ4", "Z7", "Z8"}) {
        auto A = FiniteAbelianGroup::parse(g);
        auto d = double_of_abelian(A);
        auto a = alpha_chi(standard_bicharacter(A).chi);
        for (int x = 0; x < d.rank(); x++) {
            EXPECT_EQ(d.twist[a.perm[x]], d.twist[x]) << g;
        }
    }
    auto z4 = FiniteAbelianGroup::cyclic(4);
    EXPECT_THROW(alpha_chi(Bicharacter(z4, {{2}})), DegenerateBicharacter);
}

TEST(modular_candidates, fib_and_ising) {
    auto fib = fibonacci_double();
    EXPECT_EQ(fib.rank(), 4);
    EXPECT_EQ(fib.twist[fib.label_index("(tau,1)")], Phase(2, 5));
    auto c = modular_candidates(fib);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].name, "(1,1)+(tau,taubar)");
    EXPECT_FALSE(c[0].certified);
    EXPECT_EQ(oracle::reverse_order_candidates(fib, 2).size(), 1u);
    EXPECT_EQ(oracle::reverse_order_candidates(fib, 2)[0], c[0].multiplicity);

    auto ising = ising_double();
    EXPECT_EQ(ising.rank(), 9);
    auto ci = modular_candidates(ising);
    ASSERT_EQ(ci.size(), 1u);
    EXPECT_EQ(ci[0].name, "(1,1)+(psi,psibar)+(sigma,sigmabar)");
    auto ri = oracle::reverse_order_candidates(ising, 3);
    ASSERT_EQ(ri.size(), 1u);
    EXPECT_EQ(ri[0], ci[0].multiplicity);
}

TEST(modular_candidates, pointed_doubles_match_exact) {
    for (auto g : {"Z2", "Z3", "Z2xZ2"}) {
        auto d = double_of_abelian(FiniteAbelianGroup::parse(g));
        auto exact = lagrangian_algebras(d);
        auto cand = modular_candidates(d);
        ASSERT_EQ(cand.size(), exact.size()) << g;
        for (std::size_t i = 0; i < exact.size(); i++) {
            EXPECT_EQ(cand[i].multiplicity, exact[i].multiplicity);
        }
        auto rev = oracle::reverse_order_candidates(d, 3);
        ASSERT_EQ(rev.size(), exact.size()) << g;
    }
}

TEST(modular_candidates, verlinde_reproduces_fusion) {
    auto d = double_of_abelian(FiniteAbelianGroup({2, 2}));
    EXPECT_EQ(verlinde_fusion(d.S), d.N);
    auto fib = fibonacci_double();
    int tt = fib.label_index("(tau,1)");
    EXPECT_EQ(fib.N[tt][tt][0], 1);
    EXPECT_EQ(fib.N[tt][tt][tt], 1);
}

TEST(qsystem, completeness) {
    auto f = qsystem_completeness_report(fibonacci_double());
    EXPECT_TRUE(f.complete);
    EXPECT_FALSE(f.certified);
    EXPECT_EQ(f.lagrangian_count, 1);
    auto z2 = qsystem_completeness_report(double_of_abelian(FiniteAbelianGroup::cyclic(2)));
    EXPECT_FALSE(z2.complete);
    EXPECT_EQ(z2.lagrangian_count, 2);
    auto z3 = qsystem_completeness_report(double_of_abelian(FiniteAbelianGroup::cyclic(3)));
    EXPECT_EQ(z3.lagrangian_count, 2);
    EXPECT_TRUE(qsystem_completeness_report(double_of_abelian(FiniteAbelianGroup())).complete);
    EXPECT_TRUE(qsystem_completeness_report(ising_double()).complete);
    EXPECT_EQ(qsystem_completeness_report(double_of_abelian(FiniteAbelianGroup({2, 2}))).lagrangian_count, 6);
}

TEST(modular_table, lookup) {
    EXPECT_EQ(modular_table("fib").rank(), 4);
    EXPECT_EQ(modular_table("D(Z3)").rank(), 9);
    EXPECT_THROW(modular_table("so3_5"), UnknownTable);
}
