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

#include "fusionchain/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "fusionchain/errors.h"

using namespace fusionchain;

namespace {

PauliString random_string(int n, int lo, int hi, std::mt19937 &rng) {
    std::uniform_int_distribution<int> e(0, n - 1), ph(0, PauliString::phase_modulus(n) - 1);
    std::map<int, std::pair<int, int>> sites;
    for (int s = lo; s <= hi; s++) {
        sites[s] = {e(rng), e(rng)};
    }
    return PauliString(n, ph(rng), sites);
}

}  // namespace

TEST(pauli, clock_relation_exact) {
    for (int n : {2, 3, 4, 5}) {
        auto x = PauliString::x(n, 0), z = PauliString::z(n, 0);
        EXPECT_EQ(z * x, (x * z).times_omega(1));
        EXPECT_EQ(z.commutator(x), 1);
        EXPECT_EQ(x.commutator(z), n - 1);
        EXPECT_TRUE(x.pow(n).is_identity());
        EXPECT_TRUE(z.pow(n).is_identity());
        EXPECT_EQ(x.order(), n);
        EXPECT_TRUE(x.commutes(PauliString::z(n, 1)));
    }
}

TEST(pauli, phase_modulus) {
    EXPECT_EQ(PauliString::phase_modulus(2), 4);
    EXPECT_EQ(PauliString::phase_modulus(3), 3);
    EXPECT_EQ(PauliString::phase_modulus(4), 8);
    // Y = i X Z is hermitian of order 2
    auto y = (PauliString::x(2, 0) * PauliString::z(2, 0)).with_phase(1);
    EXPECT_EQ(y.adjoint(), y);
    EXPECT_TRUE((y * y).is_identity());
}

TEST(pauli, matches_dense_matrices) {
    std::mt19937 rng(3);
    for (int n : {2, 3}) {
        for (int t = 0; t < 20; t++) {
            auto a = random_string(n, 0, 2, rng), b = random_string(n, 1, 2, rng);
            Matrix da = a.dense(0, 2), db = b.dense(0, 2);
            EXPECT_LT(((a * b).dense(0, 2) - da * db).norm(), 1e-10);
            EXPECT_LT((a.adjoint().dense(0, 2) - da.adjoint()).norm(), 1e-10);
            auto w = Phase(a.commutator(b), n).value();
            EXPECT_LT((da * db - w * db * da).norm(), 1e-10);
        }
    }
}

TEST(pauli, symmetry_conjugation) {
    int n = 3;
    Matrix u = PauliString(n, 0, {{0, {1, 0}}, {1, {1, 0}}}).dense(0, 1);
    std::mt19937 rng(5);
    for (int t = 0; t < 10; t++) {
        auto p = random_string(n, 0, 1, rng);
        EXPECT_LT((conjugate_by_symmetry(p, 1).dense(0, 1) - u * p.dense(0, 1) * u.adjoint()).norm(), 1e-10);
    }
    auto bond = PauliString(n, 0, {{0, {0, 1}}, {1, {0, 2}}});
    EXPECT_TRUE(bond.is_symmetric());
    EXPECT_FALSE(PauliString::z(n, 0).is_symmetric());
}

TEST(pauli, symplectic_roundtrip_and_shift) {
    auto p = PauliString(3, 2, {{-1, {1, 2}}, {2, {0, 1}}});
    auto v = p.symplectic(-2, 3);
    EXPECT_EQ(PauliString::from_symplectic(3, -2, v, 2), p);
    EXPECT_EQ(p.shifted(1).min_site(), 0);
    EXPECT_EQ(p.shifted(1).shifted(-1), p);
    EXPECT_THROW(p.symplectic(0, 3), InvalidArgument);
    EXPECT_THROW(PauliString(1), InvalidArgument);
}
