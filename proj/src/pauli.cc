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

#include <sstream>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

}  // namespace

PauliString::PauliString(int n) : n_(n) {
    if (n < 2) {
        throw InvalidArgument("Pauli strings need n >= 2");
    }
}

PauliString::PauliString(int n, int phase, std::map<int, std::pair<int, int>> sites)
    : n_(n), phase_(phase), sites_(std::move(sites)) {
    if (n < 2) {
        throw InvalidArgument("Pauli strings need n >= 2");
    }
    normalize();
}

PauliString PauliString::x(int n, int site, int power) {
    return PauliString(n, 0, {{site, {power, 0}}});
}

PauliString PauliString::z(int n, int site, int power) {
    return PauliString(n, 0, {{site, {0, power}}});
}

void PauliString::normalize() {
    phase_ = mod(phase_, phase_modulus(n_));
    for (auto it = sites_.begin(); it != sites_.end();) {
        it->second.first = mod(it->second.first, n_);
        it->second.second = mod(it->second.second, n_);
        if (it->second.first == 0 && it->second.second == 0) {
            it = sites_.erase(it);
        } else {
            ++it;
        }
    }
}

std::pair<int, int> PauliString::at(int site) const {
    auto it = sites_.find(site);
    return it == sites_.end() ? std::pair<int, int>{0, 0} : it->second;
}

int PauliString::min_site() const {
    if (sites_.empty()) {
        throw InvalidArgument("scalar Pauli string has empty support");
    }
    return sites_.begin()->first;
}

int PauliString::max_site() const {
    if (sites_.empty()) {
        throw InvalidArgument("scalar Pauli string has empty support");
    }
    return sites_.rbegin()->first;
}

int PauliString::charge() const {
    long long c = 0;
    for (auto &[s, e] : sites_) {
        c += e.second;
    }
    return mod(c, n_);
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (other.n_ != n_) {
        throw InvalidArgument("Pauli strings over different Z_n");
    }
    // X^a Z^b X^c Z^d = omega^{bc} X^{a+c} Z^{b+d}
    int ratio = phase_modulus(n_) / n_;
    long long ph = phase_ + other.phase_;
    auto out = sites_;
    for (auto &[s, e] : other.sites_) {
        auto &mine = out[s];
        ph += static_cast<long long>(ratio) * mine.second * e.first;
        mine.first += e.first;
        mine.second += e.second;
    }
    return PauliString(n_, mod(ph, phase_modulus(n_)), std::move(out));
}

PauliString PauliString::adjoint() const {
    // (X^a Z^b)^dag = Z^{-b} X^{-a} = omega^{ab} X^{-a} Z^{-b}
    int ratio = phase_modulus(n_) / n_;
    long long ph = -phase_;
    std::map<int, std::pair<int, int>> out;
    for (auto &[s, e] : sites_) {
        ph += static_cast<long long>(ratio) * e.first * e.second;
        out[s] = {-e.first, -e.second};
    }
    return PauliString(n_, mod(ph, phase_modulus(n_)), std::move(out));
}

PauliString PauliString::pow(int k) const {
    if (k < 0) {
        return adjoint().pow(-k);
    }
    PauliString acc(n_), base = *this;
    while (k) {
        if (k & 1) {
            acc = acc * base;
        }
        base = base * base;
        k >>= 1;
    }
    return acc;
}

PauliString PauliString::shifted(int k) const {
    std::map<int, std::pair<int, int>> out;
    for (auto &[s, e] : sites_) {
        out[s + k] = e;
    }
    return PauliString(n_, phase_, std::move(out));
}

PauliString PauliString::with_phase(int phase) const {
    return PauliString(n_, phase, sites_);
}

PauliString PauliString::times_omega(int k) const {
    int ratio = phase_modulus(n_) / n_;
    return PauliString(n_, phase_ + ratio * k, sites_);
}

int PauliString::commutator(const PauliString &other) const {
    long long c = 0;
    for (auto &[s, e] : sites_) {
        auto f = other.at(s);
        c += static_cast<long long>(e.second) * f.first - static_cast<long long>(e.first) * f.second;
    }
    return mod(c, n_);
}

int PauliString::order() const {
    PauliString p = *this;
    for (int k = 1; k <= 2 * phase_modulus(n_); k++) {
        if (p.is_identity()) {
            return k;
        }
        p = p * *this;
    }
    throw InvariantViolation("Pauli string " + str() + " has no finite order");
}

bool PauliString::operator==(const PauliString &other) const {
    return n_ == other.n_ && phase_ == other.phase_ && sites_ == other.sites_;
}

bool PauliString::operator<(const PauliString &other) const {
    return std::tie(n_, sites_, phase_) < std::tie(other.n_, other.sites_, other.phase_);
}

std::vector<int> PauliString::symplectic(int first, int last) const {
    std::vector<int> v(2 * static_cast<std::size_t>(last - first + 1), 0);
    for (auto &[s, e] : sites_) {
        if (s < first || s > last) {
            throw InvalidArgument("Pauli string " + str() + " leaves the window");
        }
        v[2 * (s - first)] = e.first;
        v[2 * (s - first) + 1] = e.second;
    }
    return v;
}

PauliString PauliString::from_symplectic(int n, int first, const std::vector<int> &v, int phase) {
    std::map<int, std::pair<int, int>> out;
    for (std::size_t k = 0; k + 1 < v.size(); k += 2) {
        out[first + static_cast<int>(k / 2)] = {v[k], v[k + 1]};
    }
    return PauliString(n, phase, std::move(out));
}

Matrix PauliString::dense(int first, int last) const {
    int m = last - first + 1;
    Matrix out = Matrix::Identity(1, 1) * scalar().value();
    for (int s = first; s < first + m; s++) {
        auto e = at(s);
        Matrix site = Matrix::Zero(n_, n_);
        // X^a Z^b |h> = omega^{b h} |h + a>
        for (int h = 0; h < n_; h++) {
            site((h + e.first) % n_, h) = Phase(static_cast<long long>(e.second) * h, n_).value();
        }
        Matrix next(out.rows() * n_, out.cols() * n_);
        for (Eigen::Index i = 0; i < out.rows(); i++) {
            for (Eigen::Index j = 0; j < out.cols(); j++) {
                next.block(i * n_, j * n_, n_, n_) = out(i, j) * site;
            }
        }
        out = std::move(next);
    }
    for (auto &[s, e] : sites_) {
        if (s < first || s > last) {
            throw InvalidArgument("Pauli string " + str() + " leaves the window");
        }
    }
    return out;
}

std::string PauliString::str() const {
    std::ostringstream os;
    if (phase_ != 0 || sites_.empty()) {
        os << "z^" << phase_ << "/" << phase_modulus(n_);
    }
    for (auto &[s, e] : sites_) {
        if (os.tellp() > 0) {
            os << " ";
        }
        if (e.first) {
            os << "X" << s;
            if (e.first != 1) {
                os << "^" << e.first;
            }
        }
        if (e.second) {
            os << "Z" << s;
            if (e.second != 1) {
                os << "^" << e.second;
            }
        }
    }
    return os.str();
}

PauliString conjugate_by_symmetry(const PauliString &p, int g) {
    return p.times_omega(-static_cast<long long>(g) * p.charge() % p.n());
}

}  // namespace fusionchain
