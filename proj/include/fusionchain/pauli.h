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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fusionchain/chainalg.h"
#include "fusionchain/phase.h"

namespace fusionchain {

/// Generalized Pauli string over Z_n on an integer-indexed chain:
/// zeta^phase * prod_i X_i^{x_i} Z_i^{z_i}, ordered by site, with ZX = omega XZ,
/// omega = exp(2 pi i/n) and zeta = exp(2 pi i/phase_modulus(n)).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(int n);
    PauliString(int n, int phase, std::map<int, std::pair<int, int>> sites);

    static int phase_modulus(int n) {
        return n % 2 == 0 ? 2 * n : n;
    }
    static PauliString x(int n, int site, int power = 1);
    static PauliString z(int n, int site, int power = 1);
    static PauliString identity(int n) {
        return PauliString(n);
    }

    int n() const {
        return n_;
    }
    int phase() const {
        return phase_;
    }
    /// Phase as an exact root of unity.
    Phase scalar() const {
        return Phase(phase_, phase_modulus(n_));
    }
    const std::map<int, std::pair<int, int>> &sites() const {
        return sites_;
    }
    std::pair<int, int> at(int site) const;
    bool is_identity() const {
        return sites_.empty() && phase_ == 0;
    }
    bool is_scalar() const {
        return sites_.empty();
    }
    int min_site() const;
    int max_site() const;
    /// Sum of Z exponents mod n; zero iff the string commutes with prod_i X_i.
    int charge() const;
    bool is_symmetric() const {
        return charge() == 0;
    }

    PauliString operator*(const PauliString &other) const;
    PauliString adjoint() const;
    PauliString pow(int k) const;
    PauliString shifted(int k) const;
    PauliString with_phase(int phase) const;
    /// Multiply by omega^k.
    PauliString times_omega(int k) const;
    /// Exponent c with this * other = omega^c other * this.
    int commutator(const PauliString &other) const;
    bool commutes(const PauliString &other) const {
        return commutator(other) == 0;
    }
    /// Smallest k > 0 with this^k = 1.
    int order() const;

    bool operator==(const PauliString &other) const;
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }
    bool operator<(const PauliString &other) const;

    /// Exponent vector (x_first, z_first, ..., x_last, z_last) on [first, last].
    std::vector<int> symplectic(int first, int last) const;
    static PauliString from_symplectic(int n, int first, const std::vector<int> &v, int phase = 0);

    /// Dense matrix on sites [first, last]; site `first` is the most significant factor.
    Matrix dense(int first, int last) const;
    std::string str() const;

   private:
    void normalize();
    int n_ = 2;
    int phase_ = 0;
    std::map<int, std::pair<int, int>> sites_;
};

/// Conjugation by U_g = prod_i X_i^g: X^a Z^b at a site picks up omega^{-g b}.
PauliString conjugate_by_symmetry(const PauliString &p, int g);

}  // namespace fusionchain
