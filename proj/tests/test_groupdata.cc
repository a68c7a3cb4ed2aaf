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

#include "fusionchain/groupdata.h"

#include <gtest/gtest.h>

#include "fusionchain/errors.h"
#include "oracles.h"

using namespace fusionchain;

TEST(group, elements_roundtrip) {
    FiniteAbelianGroup g({2, 3, 4});
    EXPECT_EQ(g.order(), 24);
    EXPECT_EQ(g.exponent(), 12);
    for (int i = 0; i < g.order(); i++) {
        EXPECT_EQ(g.index_of(g.element(i)), i);
    }
    EXPECT_EQ(g.element_order({1, 1, 1}), 12);
    EXPECT_EQ(g.element_order({0, 0, 2}), 2);
}

TEST(group, parse) {
    EXPECT_EQ(FiniteAbelianGroup::parse("Z2xZ2").factors(), (std::vector<int>{2, 2}));
    EXPECT_EQ(FiniteAbelianGroup::parse("Z3").order(), 3);
    EXPECT_EQ(FiniteAbelianGroup::parse("1").order(), 1);
    EXPECT_THROW(FiniteAbelianGroup::parse("Q8"), InvalidArgument);
    EXPECT_THROW(FiniteAbelianGroup({0}), InvalidArgument);
}

TEST(dual_group, z2_sign_pairing) {
    auto d = dual_group(FiniteAbelianGroup::cyclic(2));
    EXPECT_EQ(d.dual.order(), 2);
    EXPECT_EQ(d.pairing_phase({1}, {1}), Phase::minus_one());
    EXPECT_TRUE(d.pairing_phase({1}, {0}).is_one());
    EXPECT_TRUE(d.pairing_phase({0}, {1}).is_one());
}

TEST(dual_group, z3_cyclic_pairing) {
    auto d = dual_group(FiniteAbelianGroup::cyclic(3));
    for (int phi = 0; phi < 3; phi++) {
        for (int a = 0; a < 3; a++) {
            EXPECT_EQ(d.pairing_phase({phi}, {a}), Phase(phi * a, 3));
        }
    }
}

TEST(dual_group, z2xz2_diagonal_pairing) {
    auto d = dual_group(FiniteAbelianGroup({2, 2}));
    EXPECT_EQ(d.pairing_phase({1, 0}, {1, 0}), Phase::minus_one());
    EXPECT_TRUE(d.pairing_phase({1, 0}, {0, 1}).is_one());
    EXPECT_EQ(d.pairing_phase({1, 1}, {0, 1}), Phase::minus_one());
}

TEST(dual_group, bilinear_and_double_dual) {
    for (auto f : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {2, 4}, {6}}) {
        FiniteAbelianGroup g(f);
        auto d = dual_group(g);
        for (auto &phi : d.dual.elements()) {
            for (auto &a : g.elements()) {
                for (auto &b : g.elements()) {
                    EXPECT_EQ(d.pairing_phase(phi, g.add(a, b)), d.pairing_phase(phi, a) * d.pairing_phase(phi, b));
                }
            }
        }
        // a -> (phi -> phi(a)) separates points and is onto the double dual
        std::set<std::vector<int>> evals;
        for (auto &a : g.elements()) {
            std::vector<int> row;
            for (auto &phi : d.dual.elements()) {
                row.push_back(d.pairing(phi, a));
            }
            evals.insert(row);
        }
        EXPECT_EQ(static_cast<int>(evals.size()), g.order());
    }
}

TEST(bicharacter, standard_examples) {
    auto z2 = standard_bicharacter(FiniteAbelianGroup::cyclic(2));
    EXPECT_TRUE(z2.symmetric);
    EXPECT_TRUE(z2.nondegenerate);
    EXPECT_EQ(z2.chi.phase({1}, {1}), Phase::minus_one());

    auto z4 = standard_bicharacter(FiniteAbelianGroup::cyclic(4));
    EXPECT_TRUE(z4.symmetric);
    EXPECT_TRUE(z4.nondegenerate);
    EXPECT_EQ(z4.chi.phase({1}, {1}), Phase(1, 4));
    EXPECT_EQ(z4.chi.phase({2}, {3}), Phase(6, 4));

    FiniteAbelianGroup k({2, 2});
    EXPECT_TRUE(Bicharacter(k, {{1, 0}, {0, 1}}).is_nondegenerate());
    Bicharacter deg(k, {{1, 0}, {0, 0}});
    EXPECT_FALSE(deg.is_nondegenerate());
    EXPECT_EQ(deg.left_kernel_order(), 2);
}

TEST(bicharacter, mixed_factors_bilinear) {
    FiniteAbelianGroup g({2, 4});
    Bicharacter chi(g, {{1, 1}, {1, 3}});
    for (auto &a : g.elements()) {
        for (auto &a2 : g.elements()) {
            for (auto &b : g.elements()) {
                EXPECT_EQ(chi.phase(g.add(a, a2), b), chi.phase(a, b) * chi.phase(a2, b));
                EXPECT_EQ(chi.phase(b, g.add(a, a2)), chi.phase(b, a) * chi.phase(b, a2));
            }
        }
    }
}

TEST(chi_tilde, examples) {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    auto t2 = chi_tilde(standard_bicharacter(z2).chi);
    EXPECT_EQ(t2.apply({1}), (Element{1}));

    FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
    auto chi3 = standard_bicharacter(z3).chi;
    auto t3 = chi_tilde(chi3);
    EXPECT_TRUE(t3.is_bijective());
    auto d3 = dual_group(z3);
    for (auto &a : z3.elements()) {
        for (auto &b : z3.elements()) {
            EXPECT_EQ(d3.pairing_phase(t3.apply(a), b), chi3.phase(a, b));
        }
    }

    FiniteAbelianGroup k({2, 2});
    Bicharacter off(k, {{0, 1}, {1, 0}});
    auto tk = chi_tilde(off);
    EXPECT_EQ(tk.apply({1, 0}), (Element{0, 1}));
    auto dk = dual_group(k);
    for (auto &a : k.elements()) {
        for (auto &b : k.elements()) {
            EXPECT_EQ(dk.pairing_phase(tk.apply(a), b), off.phase(a, b));
        }
    }
}

TEST(chi_tilde, inverse_is_identity) {
    for (auto f : std::vector<std::vector<int>>{{2}, {3}, {5}, {2, 2}, {3, 3}, {4}, {2, 4}}) {
        FiniteAbelianGroup g(f);
        auto t = chi_tilde(standard_bicharacter(g).chi);
        auto id = t.inverse().after(t);
        EXPECT_EQ(id, GroupHom::identity(g));
        EXPECT_EQ(t.after(t.inverse()), GroupHom::identity(g));
    }
}

TEST(chi_tilde, degenerate_throws) {
    FiniteAbelianGroup k({2, 2});
    EXPECT_THROW(chi_tilde(Bicharacter(k, {{1, 0}, {0, 0}})), DegenerateBicharacter);
}

TEST(automorphisms, counts) {
    EXPECT_EQ(automorphism_group(FiniteAbelianGroup::cyclic(2)).size(), 1u);
    EXPECT_EQ(automorphism_group(FiniteAbelianGroup::cyclic(3)).size(), 2u);
    EXPECT_EQ(automorphism_group(FiniteAbelianGroup({2, 2})).size(), 6u);
    EXPECT_EQ(automorphism_group(FiniteAbelianGroup({1})).size(), 1u);
}

TEST(automorphisms, match_permutation_brute_force) {
    for (auto f : std::vector<std::vector<int>>{{2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {8}, {2, 2, 2}}) {
        FiniteAbelianGroup g(f);
        EXPECT_EQ(static_cast<int>(automorphism_group(g).size()), oracle::brute_automorphism_count(g)) << g.name();
    }
}

TEST(automorphisms, closed_group) {
    for (auto f : std::vector<std::vector<int>>{{2, 2}, {2, 4}, {3, 3}}) {
        FiniteAbelianGroup g(f);
        auto auts = automorphism_group(g);
        std::set<std::vector<int>> tables;
        for (auto &a : auts) {
            tables.insert(a.table());
        }
        EXPECT_TRUE(tables.count(GroupHom::identity(g).table()));
        for (auto &a : auts) {
            EXPECT_TRUE(tables.count(a.inverse().table()));
            for (auto &b : auts) {
                EXPECT_TRUE(tables.count(a.after(b).table()));
            }
        }
    }
}

TEST(automorphisms, cap) {
    EXPECT_THROW(automorphism_group(FiniteAbelianGroup::cyclic(65)), CapExceeded);
    EXPECT_NO_THROW(automorphism_group(FiniteAbelianGroup::cyclic(65), 128));
}

TEST(subgroups, counts) {
    EXPECT_EQ(all_subgroups(FiniteAbelianGroup({2, 2})).size(), 5u);
    EXPECT_EQ(all_subgroups(FiniteAbelianGroup::cyclic(6)).size(), 4u);
    EXPECT_EQ(all_subgroups(FiniteAbelianGroup({3, 3})).size(), 6u);
}
