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

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "fusionchain/fusion.h"
#include "fusionchain/groupdata.h"

namespace fusionchain {

using Matrix = Eigen::MatrixXcd;
using IntSquare = std::vector<std::vector<long long>>;

struct Edge {
    int source;
    int target;
    /// Position among the parallel edges source -> target.
    int copy;
};

/// Vertices are simples of the module; edges i -> j enumerate a basis of M(i, X |> j).
struct EdgeGraph {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    IntSquare adjacency;
    bool connected = false;
    bool primitive = false;

    int vertex_count() const {
        return static_cast<int>(vertices.size());
    }
    /// On-site dimension of the concrete realization (number of edges).
    int site_dimension() const {
        return static_cast<int>(edges.size());
    }
};

EdgeGraph edge_graph(const ModuleCategorySpec &module, const ObjectExpr &x);

struct WindowBlock {
    std::string key;
    /// Vertex pair (edge form) or central label and -1 (abstract form).
    int first;
    int second;
    long long dim;
    /// Trace of a minimal projection in this block.
    double weight;
};

/// Finite-window multimatrix algebra: its blocks, dimensions and trace data.
struct WindowAlgebra {
    enum class Form { Edge, Abstract };
    Form form = Form::Abstract;
    int n = 0;
    std::vector<WindowBlock> blocks;

    long long dimension() const;
    /// Sum of dim * weight; 1 for a normalized trace.
    double trace_of_unit() const;
};

/// Path algebra of the edge graph: block (i, j) has the number of length-n paths.
WindowAlgebra window_algebra(const EdgeGraph &graph, int n);
/// Abstract fusion-chain window End(X^n) with Markov weights d_c / d_X^n.
WindowAlgebra window_algebra(const FusionCategorySpec &spec, const ObjectExpr &x, int n);

/// Fusion-tree basis of Hom(c, X^n): site channels and left-to-right intermediates.
struct FusionPath {
    std::vector<int> sites;
    std::vector<int> intermediates;
};

/// The abstract chain End(X^n) with explicit path bases, for window inclusions.
class FusionChain {
   public:
    FusionChain(FusionCategorySpec spec, ObjectExpr x);

    const FusionCategorySpec &category() const {
        return spec_;
    }
    const ObjectExpr &object() const {
        return x_;
    }
    /// Simple label of each site channel (X expanded with multiplicity).
    const std::vector<int> &channels() const {
        return channels_;
    }
    /// Paths of length n grouped by final label c.
    std::vector<std::vector<FusionPath>> paths(int n) const;

    struct Element {
        int n = 0;
        std::vector<Matrix> blocks;
    };

    Element identity(int n) const;
    Element zero(int n) const;
    Element multiply(const Element &a, const Element &b) const;
    Element adjoint(const Element &a) const;
    /// Normalized Markov trace sum_c (d_c / d_X^n) Tr f_c.
    std::complex<double> trace(const Element &a) const;
    double distance(const Element &a, const Element &b) const;

    /// 1^{offset} (x) f (x) 1^{target - n - offset}.
    Element include(const Element &f, int target, int offset) const;
    /// Change of basis from (a (x) old path, fused to c) to new paths; columns labeled by
    /// (channel, old path) pairs, rows by new paths, for each c. Unitary when F is.
    std::vector<Matrix> left_recoupling(int n) const;

   private:
    Element include_left(const Element &f) const;
    Element include_right(const Element &f) const;

    FusionCategorySpec spec_;
    ObjectExpr x_;
    std::vector<int> channels_;
    double dim_x_;
};

/// Regular representation operator R_g on C^{|A|}: R_g |h> = |g + h>.
Matrix regular_rep(const FiniteAbelianGroup &group, const Element &g);
/// U_g = R_g^{(x) n}.
Matrix group_mpo(const FiniteAbelianGroup &group, const Element &g, int n);
/// Diagonal clock operator Z|h> = exp(2 pi i h / n)|h> for cyclic groups.
Matrix clock_matrix(int n);
/// Operator `op` (on `width` consecutive sites) placed at `site` inside n sites of dimension d.
Matrix embed(const Matrix &op, int d, int n, int site, int width = 1);

constexpr long long kDefaultCommutantCap = 4096;

/// Commutant of a set of operators, stored as an orthonormal eigenbasis V split
/// into blocks with the commutant taken blockwise. Elements are V (+)_k End(C^{b_k}) V^dagger
/// when every block is `full`; otherwise an explicit basis is carried.
struct Commutant {
    int total_dim = 0;
    Matrix V;
    std::vector<int> block_sizes;
    bool structured = true;
    std::vector<Matrix> explicit_basis;

    long long dimension() const;
    /// Orthonormal basis under the normalized trace tr(x^dagger y)/D. Materialized lazily.
    std::vector<Matrix> basis() const;
    /// Orthogonal projection onto the commutant.
    Matrix project(const Matrix &x) const;
};

Commutant commutant_basis(const std::vector<Matrix> &generators, long long cap = kDefaultCommutantCap);

/// Commutant of the on-site symmetry {U_g} of `group` on n sites.
Commutant symmetric_commutant(const FiniteAbelianGroup &group, int n, long long cap = kDefaultCommutantCap);

struct AmbientStability {
    int window = 0;
    int ambient = 0;
    long long dimension = 0;
    long long dimension_next = 0;
    bool stable = false;
};

/// Dimension of {x in A_I : x (x) 1 commutes with U_g on J} for |J| = ambient and ambient + 1.
AmbientStability ambient_stability(const FiniteAbelianGroup &group, int window, int ambient,
                                   long long cap = kDefaultCommutantCap);

/// E(x) = |A|^-1 sum_g U_g x U_g^dagger on n sites.
Matrix conditional_expectation(const Matrix &x, const FiniteAbelianGroup &group, int n);

/// Diagonal of the projector onto configurations where edge s_i ends where s_{i+1} starts.
Eigen::VectorXd edge_constraint_projector(const EdgeGraph &graph, int n, int i);

/// dim C(X^n, X^n (x) L) for the regular object X of Vec(A), L given by elements of
/// A x dual(A) (A coordinates first).
long long extended_window_dims(const FiniteAbelianGroup &group, const std::vector<Element> &lagrangian_support, int n);

}  // namespace fusionchain
