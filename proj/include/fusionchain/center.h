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

#include <optional>
#include <string>
#include <vector>

#include "fusionchain/chainalg.h"
#include "fusionchain/groupdata.h"
#include "fusionchain/phase.h"

namespace fusionchain {

/// Anyon data of a modular category. For doubles of abelian groups the
/// labels are indexed like the elements of A x dual(A) and `group` is set.
struct AnyonSystem {
    std::string name;
    std::vector<std::string> labels;
    std::optional<FiniteAbelianGroup> base;   // A
    std::optional<FiniteAbelianGroup> group;  // A x dual(A)
    std::vector<std::vector<std::vector<int>>> N;
    std::vector<Phase> twist;
    /// Full double braiding; filled for pointed systems.
    std::vector<std::vector<Phase>> monodromy;
    std::vector<double> qdims;
    /// Normalized modular S matrix.
    Matrix S;

    int rank() const {
        return static_cast<int>(labels.size());
    }
    bool pointed() const {
        return group.has_value();
    }
    int label_index(const std::string &label) const;
    double global_dimension() const;
};

/// Anyons (a, phi) with theta = phi(a) and M((a,phi),(b,psi)) = phi(b) psi(a).
AnyonSystem double_of_abelian(const FiniteAbelianGroup &A);
AnyonSystem fibonacci_double();
AnyonSystem ising_double();
/// Hardcoded tables by name: "fib", "ising", or "D(<group>)".
AnyonSystem modular_table(const std::string &name);

struct LagrangianAlgebra {
    std::string name;
    std::vector<int> multiplicity;
    /// False for candidates that only satisfy necessary conditions.
    bool certified = true;
    double dimension = 0;

    std::vector<int> support() const;
    bool operator==(const LagrangianAlgebra &other) const {
        return multiplicity == other.multiplicity;
    }
    bool operator<(const LagrangianAlgebra &other) const {
        return multiplicity < other.multiplicity;
    }
};

/// Pointed: Lagrangian subgroups, certified. Otherwise candidates from modular data.
std::vector<LagrangianAlgebra> lagrangian_algebras(const AnyonSystem &sys);
/// Lagrangian predicate for a pointed support set.
bool is_lagrangian_subgroup(const AnyonSystem &sys, const std::vector<int> &support);
LagrangianAlgebra electric_algebra(const AnyonSystem &sys);
LagrangianAlgebra magnetic_algebra(const AnyonSystem &sys);
/// Finds a Lagrangian by name ("electric", "magnetic", or its display name).
LagrangianAlgebra lagrangian_by_name(const AnyonSystem &sys, const std::string &name);

struct BraidedAutoEq {
    std::vector<int> perm;  // perm[x] = image of anyon x
    std::optional<GroupHom> hom;

    bool operator==(const BraidedAutoEq &other) const {
        return perm == other.perm;
    }
    bool operator<(const BraidedAutoEq &other) const {
        return perm < other.perm;
    }
    bool is_identity() const;
    BraidedAutoEq after(const BraidedAutoEq &first) const;
    BraidedAutoEq inverse() const;
    LagrangianAlgebra apply(const LagrangianAlgebra &l) const;
};

BraidedAutoEq identity_autoeq(const AnyonSystem &sys);
/// True iff perm preserves fusion, twists and monodromy exactly.
bool preserves_braiding(const AnyonSystem &sys, const std::vector<int> &perm);
std::vector<BraidedAutoEq> braided_autoequivalences(const AnyonSystem &sys, int cap = kDefaultGroupCap);
/// (a, f) -> (chi~^{-1}(f), chi~(a)) on D(A).
BraidedAutoEq alpha_chi(const Bicharacter &chi);
/// (a, f) -> (-a, -f).
BraidedAutoEq charge_conjugation_autoeq(const AnyonSystem &sys);
int torsor_size(const AnyonSystem &sys, const LagrangianAlgebra &l);

struct QSystemReport {
    std::string system;
    bool complete = false;
    int lagrangian_count = 0;
    bool certified = true;
    std::vector<LagrangianAlgebra> algebras;
};

QSystemReport qsystem_completeness_report(const AnyonSystem &sys);

/// Multiplicity vectors satisfying the necessary algebra conditions, from
/// S (fusion via Verlinde) and T.
std::vector<LagrangianAlgebra> modular_candidates(const AnyonSystem &sys, double tol = 1e-9);
/// Fusion coefficients from S by the Verlinde formula.
std::vector<std::vector<std::vector<int>>> verlinde_fusion(const Matrix &S, double tol = 1e-9);

std::string describe(const AnyonSystem &sys, const LagrangianAlgebra &l);

}  // namespace fusionchain
