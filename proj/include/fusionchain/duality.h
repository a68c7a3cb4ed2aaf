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
#include <utility>
#include <vector>

#include "fusionchain/center.h"
#include "fusionchain/fusion.h"
#include "fusionchain/pauli.h"

namespace fusionchain {

/// Standard generators of the Z_n-symmetric chain algebra: the on-site clock
/// X_i and the bond term B_i = Z_i Z_{i+1}^dag.
enum class Generator { X, B };

std::string generator_name(Generator g);

/// Translation-covariant duality on the symmetric Z_n chain, stored by the
/// images of X_0 and B_0; the image of a site-i generator is the shift by i.
struct DualitySpec {
    std::string name;
    int n = 2;
    PauliString image_x;
    PauliString image_b;
    std::optional<BraidedAutoEq> center_action;
    int spread = 0;

    static PauliString source(int n, Generator g, int i);
    PauliString image(Generator g, int i) const;
    /// Image of an arbitrary symmetric Pauli string.
    PauliString apply(const PauliString &p) const;
    /// Largest distance from the source support to the image support.
    int measured_spread() const;
};

DualitySpec kramers_wannier_spec(int n);
DualitySpec identity_spec(int n);
/// Symmetric restriction of the translation i -> i - k.
DualitySpec shift_spec(int n, int k = 1);
/// X -> X^dag, B -> B^dag.
DualitySpec charge_conjugation_spec(int n);
/// a after b.
DualitySpec compose(const DualitySpec &a, const DualitySpec &b);
DualitySpec inverse(const DualitySpec &spec, int search_radius = 4);

/// Exponent-level writing of a symmetric string as omega-phase times an
/// ordered product of X_i and B_i powers: {phase, x-powers by site, b-powers by site}.
struct SymmetricWord {
    int phase = 0;
    std::vector<std::pair<int, int>> x_powers;
    std::vector<std::pair<int, int>> b_powers;
};
SymmetricWord symmetric_word(const PauliString &p);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct DualityReport {
    std::string spec;
    int window = 0;
    int measured_spread = 0;
    int declared_spread = 0;
    std::vector<Check> checks;
    bool passed() const;
};

/// Exact checks on the window [0, n-1]: symmetry of images, generation with
/// matching dimension, relations, spread, *-compatibility. Throws
/// RelationViolated on failure unless `throw_on_failure` is false.
DualityReport verify_duality(const DualitySpec &spec, int n, bool throw_on_failure = true);

/// Numerical cross-check of the relations with dense matrices on a small window.
bool dense_relation_check(const DualitySpec &spec, int n, double tol = 1e-10);

struct HamiltonianTerm {
    double coefficient = 0;
    PauliString op;
};

/// -sum J B_i - sum h X_i (plus adjoints for n > 2) on [0, n-1].
std::vector<HamiltonianTerm> clock_hamiltonian(int n_group, double J, double h, int window);
/// Couplings (J', h') with spec(H_{J,h}) = H_{J',h'} termwise up to translation, if any.
std::optional<std::pair<double, double>> mapped_couplings(const DualitySpec &spec, double J, double h, int window = 6);
bool intertwine_check(const DualitySpec &spec, double J, double h, double J_expected, double h_expected,
                      int window = 6);

/// Translation-covariant automorphism of the full Z_n chain stored by the
/// images of X_0 and Z_0.
struct ExtensionTable {
    std::string name;
    int n = 2;
    PauliString image_x;
    PauliString image_z;

    PauliString image_of_x(int i) const {
        return image_x.shifted(i);
    }
    PauliString image_of_z(int i) const {
        return image_z.shifted(i);
    }
    PauliString apply(const PauliString &p) const;
    int spread() const;
    bool operator==(const ExtensionTable &other) const {
        return n == other.n && image_x == other.image_x && image_z == other.image_z;
    }
    bool operator<(const ExtensionTable &other) const {
        return std::tie(image_z, image_x) < std::tie(other.image_z, other.image_x);
    }
};

ExtensionTable identity_extension(int n);
/// Conjugation by U_g = prod_i X_i^g.
ExtensionTable symmetry_conjugation(int n, int g);
ExtensionTable shift_extension(int n, int k = 1);
/// X -> X^dag, Z -> Z^dag.
ExtensionTable charge_conjugation_extension(int n);
/// ext after Ad(U_g).
ExtensionTable compose_with_symmetry(const ExtensionTable &ext, int g);

/// True iff ext restricts to spec on X_0 and B_0 and is an automorphism on the window.
bool is_extension_of(const ExtensionTable &ext, const DualitySpec &spec, int window = 6);
/// Relation, inverse-locality and generation checks on the window.
DualityReport verify_extension(const ExtensionTable &ext, int window = 6);

struct ExtensionVerdict {
    bool extends = false;
    LagrangianAlgebra source;
    LagrangianAlgebra target;
    LagrangianAlgebra image;
    int torsor_size = 0;
    std::vector<ExtensionTable> representatives;
};

/// Compare beta(L_source) with L_target for the declared center action beta.
ExtensionVerdict check_extension(const DualitySpec &spec, const LagrangianAlgebra &source,
                                 const LagrangianAlgebra &target, int window = 6);

constexpr long long kDefaultSearchCap = 20000000;

/// Every translation-covariant image of Z_0 supported on [-R, R] that extends
/// spec to an automorphism of the full chain (generalized Clifford ansatz).
std::vector<ExtensionTable> clifford_extension_search_all(const DualitySpec &spec, int R, int window,
                                                          long long cap = kDefaultSearchCap);
std::optional<ExtensionTable> clifford_extension_search(const DualitySpec &spec, int R, int window,
                                                        long long cap = kDefaultSearchCap);

/// g in Z_n with ext2 = ext1 after Ad(U_g).
int torsor_difference(const ExtensionTable &ext1, const ExtensionTable &ext2, int window = 6);

struct SymmetryCheck {
    bool direct = false;
    bool gamma = false;
    /// Induced automorphism g -> g' of the symmetry group, if any.
    std::optional<int> induced_multiplier;
};

SymmetryCheck symmetric_extension_check(const ExtensionTable &ext, int window = 6);

/// Abstract generalized translation built from a graded object Y.
struct ShiftDescriptor {
    std::string name;
    std::string category;
    std::string object;
    std::optional<BraidedAutoEq> center_action;
    std::string center_system;
    /// d_Y when the object lies in the nontrivial graded part.
    std::optional<double> categorical_index;
    std::optional<DualitySpec> table;
    std::string reduction;
};

ShiftDescriptor generalized_shift_spec(const FusionCategorySpec &cat, int y);

}  // namespace fusionchain
