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

#include <functional>
#include <string>
#include <vector>

#include "fusionchain/phase.h"

namespace fusionchain {

/// Group element as an exponent tuple (a_1, ..., a_k), 0 <= a_i < n_i.
using Element = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

/// A finite abelian group Z_{n_1} x ... x Z_{n_k} in cyclic-factor form.
///
/// Elements are enumerated in mixed radix with the first factor most
/// significant, so index_of/element are mutually inverse bijections onto
/// [0, order()).
class FiniteAbelianGroup {
   public:
    FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {
    }
    explicit FiniteAbelianGroup(std::vector<int> cyclic_factors);

    static FiniteAbelianGroup cyclic(int n) {
        return FiniteAbelianGroup({n});
    }
    /// Parses "Z2", "Z2xZ2", "Z3xZ4", "1" (trivial).
    static FiniteAbelianGroup parse(const std::string &text);

    const std::vector<int> &factors() const {
        return factors_;
    }
    int rank() const {
        return static_cast<int>(factors_.size());
    }
    int order() const {
        return order_;
    }
    int exponent() const {
        return exponent_;
    }
    /// True when the group is isomorphic to a cyclic group with the given
    /// factor list of length one.
    bool is_cyclic_form() const {
        return factors_.size() == 1;
    }

    Element identity() const {
        return Element(factors_.size(), 0);
    }
    Element generator(int i) const;
    Element add(const Element &a, const Element &b) const;
    Element negate(const Element &a) const;
    Element scale(const Element &a, int k) const;
    Element reduce(Element a) const;
    bool is_valid(const Element &a) const;
    int element_order(const Element &a) const;

    int index_of(const Element &a) const;
    Element element(int index) const;
    std::vector<Element> elements() const;

    /// Direct product with factors concatenated.
    FiniteAbelianGroup product(const FiniteAbelianGroup &other) const;

    std::string name() const;
    std::string format(const Element &a) const;

    bool operator==(const FiniteAbelianGroup &other) const {
        return factors_ == other.factors_;
    }
    bool operator!=(const FiniteAbelianGroup &other) const {
        return !(*this == other);
    }

   private:
    std::vector<int> factors_;
    int order_ = 1;
    int exponent_ = 1;
};

/// Character phi(a) = zeta^(sum c_i a_i e/n_i), zeta = exp(2 pi i / e).
struct Character {
    std::vector<int> exponents;
    bool operator==(const Character &other) const {
        return exponents == other.exponents;
    }
};

/// Exponent (mod group exponent) of phi(a).
int character_value(const FiniteAbelianGroup &group, const Character &phi, const Element &a);

/// The dual group together with its evaluation pairing. The dual of
/// Z_{n_1} x ... x Z_{n_k} is presented with the same factors; element phi of
/// the dual is the character with exponents phi.
struct DualGroup {
    FiniteAbelianGroup group;
    FiniteAbelianGroup dual;

    /// Exponent mod exponent() of phi(a).
    int pairing(const Element &phi, const Element &a) const;
    Phase pairing_phase(const Element &phi, const Element &a) const;
};

DualGroup dual_group(const FiniteAbelianGroup &group);

/// chi(a, b) = exp(2 pi i * sum_ij a_i B_ij b_j / gcd(n_i, n_j)).
class Bicharacter {
   public:
    Bicharacter(FiniteAbelianGroup group, IntMatrix matrix);

    const FiniteAbelianGroup &group() const {
        return group_;
    }
    const IntMatrix &matrix() const {
        return matrix_;
    }

    /// Exponent mod group().exponent().
    int operator()(const Element &a, const Element &b) const;
    Phase phase(const Element &a, const Element &b) const;

    bool is_symmetric() const;
    /// Order of {a : chi(a, .) == 1}.
    int left_kernel_order() const;
    bool is_nondegenerate() const {
        return left_kernel_order() == 1;
    }

   private:
    FiniteAbelianGroup group_;
    IntMatrix matrix_;
};

struct BicharacterReport {
    Bicharacter chi;
    bool symmetric;
    bool nondegenerate;
};

BicharacterReport standard_bicharacter(const FiniteAbelianGroup &group);

/// Homomorphism between finite abelian groups, stored by generator images
/// and a full element table.
class GroupHom {
   public:
    GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<Element> generator_images);

    static GroupHom identity(const FiniteAbelianGroup &group);

    const FiniteAbelianGroup &source() const {
        return source_;
    }
    const FiniteAbelianGroup &target() const {
        return target_;
    }
    const std::vector<Element> &generator_images() const {
        return images_;
    }
    /// Integer matrix whose column i is the image of generator i.
    IntMatrix matrix() const;

    Element apply(const Element &a) const;
    int apply_index(int index) const {
        return table_[index];
    }
    const std::vector<int> &table() const {
        return table_;
    }

    bool is_bijective() const;
    /// Requires is_bijective().
    GroupHom inverse() const;
    /// (*this) after `first`: a -> this(first(a)).
    GroupHom after(const GroupHom &first) const;

    bool operator==(const GroupHom &other) const {
        return source_ == other.source_ && target_ == other.target_ && table_ == other.table_;
    }
    bool operator<(const GroupHom &other) const {
        return table_ < other.table_;
    }

   private:
    FiniteAbelianGroup source_;
    FiniteAbelianGroup target_;
    std::vector<Element> images_;
    std::vector<int> table_;
};

/// chi~(a) = chi(a, .) as an isomorphism from A to its dual group.
GroupHom chi_tilde(const Bicharacter &chi);

/// Partial-assignment filter used while enumerating automorphisms: called
/// with the images chosen for generators 0..k-1; returning false prunes.
using AutomorphismFilter = std::function<bool(const std::vector<Element> &partial_images)>;

constexpr int kDefaultGroupCap = 64;
constexpr std::size_t kDefaultAutomorphismListCap = 2000000;

/// All automorphisms of `group` accepted by `filter`, sorted by element table.
/// Brute force over generator images with order and injectivity pruning.
std::vector<GroupHom> automorphism_group(const FiniteAbelianGroup &group, int group_cap = kDefaultGroupCap,
                                         const AutomorphismFilter &filter = nullptr,
                                         std::size_t list_cap = kDefaultAutomorphismListCap);

/// Subgroup of `group` generated by `generators`, as a sorted index list.
std::vector<int> generated_subgroup(const FiniteAbelianGroup &group, const std::vector<Element> &generators);

/// Every subgroup of `group`, each as a sorted index list; sorted canonically.
std::vector<std::vector<int>> all_subgroups(const FiniteAbelianGroup &group, int group_cap = kDefaultGroupCap);

}  // namespace fusionchain
