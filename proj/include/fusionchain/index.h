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
#include "fusionchain/duality.h"
#include "fusionchain/zn_linalg.h"

namespace fusionchain {

struct MarkovTrace {
    /// Trace of a minimal projection in each block.
    std::vector<double> minimal;
    /// Trace of each block's unit.
    std::vector<double> block;
};

MarkovTrace markov_trace(const WindowAlgebra &w);

/// Inclusion N = (+)_i M_{a_i} in M = (+)_j M_{b_j}: lambda[i][j] copies of
/// block i inside block j, with minimal-projection traces s_i and t_j.
struct TracedInclusion {
    std::vector<std::vector<long long>> lambda;
    std::vector<long long> small_dims;
    std::vector<long long> large_dims;
    std::vector<double> small_trace;
    std::vector<double> large_trace;

    int small_blocks() const {
        return static_cast<int>(small_dims.size());
    }
    int large_blocks() const {
        return static_cast<int>(large_dims.size());
    }
    /// Throws InvalidArgument on dimension or trace mismatch.
    void validate(double tol = 1e-9) const;
    bool connected() const;
    /// Connected components as (small block indices, large block indices).
    std::vector<std::pair<std::vector<int>, std::vector<int>>> components() const;
};

/// Inclusion with large dims lambda^T a and the Markov trace (Perron-Frobenius).
TracedInclusion markov_inclusion(const std::vector<std::vector<long long>> &lambda,
                                 const std::vector<long long> &small_dims);
/// T in S for the algebras generated by Pauli groups with exponent spans
/// `small` and `large`, with the normalized trace.
TracedInclusion pauli_inclusion(int n, const ZnMatrix &small, const ZnMatrix &large);

struct WatataniResult {
    /// Value of the index element on each block of the large algebra.
    std::vector<double> per_block;
    bool scalar = false;
    double value = 0;
    /// True when the quasi-basis was also checked on explicit matrices.
    bool quasi_basis_checked = false;
};

/// Index of the trace-preserving expectation via the matrix-unit quasi-basis.
WatataniResult watatani_blocks(const TracedInclusion &inc, double tol = 1e-9);
/// Scalar index; throws DisconnectedInclusion or InvariantViolation if not scalar.
double watatani_index(const TracedInclusion &inc, double tol = 1e-9);
/// ||lambda||^2, the index for a Markov trace.
double markov_index(const TracedInclusion &inc);

/// Order of the center S cap S^perp of the Pauli span S.
ExactOrder pauli_center_order(int n, const ZnMatrix &span);

struct IndexEstimate {
    std::string subject;
    std::vector<int> scales;
    std::vector<ExactOrder> squared;
    std::vector<double> values;
    double value = 0;
    bool converged = false;
    double tolerance = 1e-6;
    int buffer = 2;
    std::string note;
};

constexpr int kDefaultIndexBuffer = 2;

/// Ind = sqrt([alpha(A_x) : A_y] / [A_x : A_y]) on right half-chains truncated to
/// windows of `scale` sites.
IndexEstimate ind_estimate(const DualitySpec &spec, const std::vector<int> &scales, int buffer = kDefaultIndexBuffer,
                           double tol = 1e-6);
IndexEstimate ind_estimate(const ShiftDescriptor &desc, const std::vector<int> &scales,
                           int buffer = kDefaultIndexBuffer, double tol = 1e-6);
/// Same estimator on the full chain algebra for an extension table.
IndexEstimate ind_estimate(const ExtensionTable &ext, const std::vector<int> &scales,
                           int buffer = kDefaultIndexBuffer, double tol = 1e-6);

}  // namespace fusionchain
