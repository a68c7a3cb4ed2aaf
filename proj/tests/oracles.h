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

// Brute-force reference computations shared by unit and acceptance tests.
// Nothing here calls the fast paths they are compared against.

#include <set>
#include <vector>

#include "fusionchain/groupdata.h"

namespace oracle {

using fusionchain::Element;
using fusionchain::FiniteAbelianGroup;

/// Every element of the Z_n-span of `gens` (vectors of equal length), by closure.
std::set<std::vector<int>> brute_span(int n, const std::vector<std::vector<int>> &gens, std::size_t dim);

/// Number of bijections of the element set that are homomorphisms.
int brute_automorphism_count(const FiniteAbelianGroup &g);

}  // namespace oracle

#include "fusionchain/fusion.h"

namespace oracle {

/// Multiplicity of every label in X^n, by depth-first enumeration of every
/// fusion path 1 = c_0 -> c_1 -> ... -> c_n.
std::vector<long long> path_count_multiplicities(const fusionchain::FusionCategorySpec &spec,
                                                 const fusionchain::ObjectExpr &x, int n);

}  // namespace oracle

#include "fusionchain/chainalg.h"

namespace oracle {

/// Null-space dimension of vec(x) -> (I (x) g - g^T (x) I) vec(x) stacked over generators, by pivoted QR rank.
long long dense_commutant_dimension(const std::vector<fusionchain::Matrix> &generators, double cutoff = 1e-9);

/// (1/|G|) sum_g |tr U_g|^2 for the on-site regular action on n sites.
long long character_commutant_dimension(const fusionchain::FiniteAbelianGroup &group, int n);

}  // namespace oracle

#include "fusionchain/center.h"

namespace oracle {

/// Subsets of anyons containing 1, of size sqrt(rank), closed under fusion, with trivial twist.
int brute_lagrangian_subsets(const fusionchain::AnyonSystem &sys);

/// Permutations of anyons preserving fusion, twist and monodromy, by full permutation scan.
int brute_braided_autoequivalences(const fusionchain::AnyonSystem &sys);

/// Multiplicity vectors meeting the necessary Lagrangian conditions, enumerated
/// odometer-style from the last label down with a flat bound, fusion from S.
std::vector<std::vector<int>> reverse_order_candidates(const fusionchain::AnyonSystem &sys, int max_multiplicity);

}  // namespace oracle
