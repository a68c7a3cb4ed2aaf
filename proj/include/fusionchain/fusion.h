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

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusionchain/groupdata.h"
#include "fusionchain/phase.h"

namespace fusionchain {

/// An F-symbol entry scale * phase.
struct FValue {
    Phase phase;
    double scale = 1.0;
    std::complex<double> value() const {
        return scale * phase.value();
    }
};

/// Key (a, b, c, d, e, f) for [F^{abc}_d]_{e f}, e in a(x)b, f in b(x)c.
using FKey = std::array<int, 6>;

enum class FKind {
    None,     // no associator data
    Trivial,  // every admissible entry equals 1
    Table,    // explicit table of every admissible entry
};

struct TambaraYamagamiData {
    FiniteAbelianGroup group;
    Bicharacter chi;
    int sign;
};

/// Fusion ring with optional associator data. Label 0 is the unit.
struct FusionCategorySpec {
    std::string name;
    std::vector<std::string> labels;
    /// N[a][b][c] = N_{ab}^c.
    std::vector<std::vector<std::vector<int>>> N;
    std::vector<int> dual;
    std::vector<double> qdims;
    FKind fkind = FKind::None;
    std::map<FKey, FValue> ftable;
    /// Optional grading label -> element of Z_{grading_order}.
    std::vector<int> grading;
    int grading_order = 1;

    std::optional<FiniteAbelianGroup> pointed_group;
    std::optional<TambaraYamagamiData> ty;

    int rank() const {
        return static_cast<int>(labels.size());
    }
    int label_index(const std::string &name) const;
    bool admissible(int a, int b, int c, int d, int e, int f) const;
    /// [F^{abc}_d]_{ef}; zero on inadmissible tuples. Throws FSymbolsMissing when fkind == None.
    std::complex<double> F(int a, int b, int c, int d, int e, int f) const;
    bool multiplicity_free() const;
    double global_dimension() const;
};

/// Multiplicity vector over the labels of a category.
struct ObjectExpr {
    std::vector<int> mult;

    static ObjectExpr simple(int rank, int label);
    static ObjectExpr unit(int rank) {
        return simple(rank, 0);
    }
    static ObjectExpr sum(int rank, const std::vector<int> &labels);
    int total() const;
    double dimension(const FusionCategorySpec &spec) const;
    bool operator==(const ObjectExpr &other) const {
        return mult == other.mult;
    }
};

/// Right module category at the level of multiplicities:
/// action[a][i][j] = dim M(i, a |> j).
struct ModuleCategorySpec {
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<std::vector<int>>> action;

    int rank() const {
        return static_cast<int>(labels.size());
    }
    /// action matrix of an object: sum of multiplicity-weighted label matrices.
    std::vector<std::vector<int>> object_action(const ObjectExpr &x) const;
    bool is_associative(const FusionCategorySpec &spec) const;
    bool is_indecomposable() const;
};

FusionCategorySpec pointed_category(const FiniteAbelianGroup &group);
/// Rep(G) of an abelian group, presented as the pointed category on the dual group.
FusionCategorySpec rep_category(const FiniteAbelianGroup &group);
FusionCategorySpec tambara_yamagami(const FiniteAbelianGroup &group, const Bicharacter &chi, int sign);
FusionCategorySpec fibonacci_category();
FusionCategorySpec ising_category();

ModuleCategorySpec regular_module(const FusionCategorySpec &spec);
/// The rank-one module of a pointed category (fiber functor).
ModuleCategorySpec fiber_functor_module(const FusionCategorySpec &spec);

ObjectExpr tensor_decompose(const FusionCategorySpec &spec, const ObjectExpr &x, const ObjectExpr &y);
ObjectExpr power_decompose(const FusionCategorySpec &spec, const ObjectExpr &x, int n);
/// dim End(x) = sum m_c^2.
long long end_dimension(const ObjectExpr &x);

/// Perron-Frobenius dimensions, checked against the fusion rules to 1e-12.
std::vector<double> quantum_dims(const FusionCategorySpec &spec);

/// Largest |sum_e N_ab^e N_ec^d - sum_f N_bc^f N_af^d| over all tuples.
long long associativity_defect(const FusionCategorySpec &spec);
/// Largest pentagon residual over admissible tuples (multiplicity-free only).
double pentagon_residual(const FusionCategorySpec &spec);
/// Checks unit, associativity, duals, dimensions and (when present) pentagon.
void validate_category(const FusionCategorySpec &spec);

struct StrongGeneration {
    bool generating = false;
    int power = -1;
    std::string reason;
};

/// Whether some power X^n (n <= rank^2) contains every simple of the trivially
/// graded component (every simple when ungraded).
StrongGeneration is_strong_generator(const ObjectExpr &x, const FusionCategorySpec &spec);

}  // namespace fusionchain
