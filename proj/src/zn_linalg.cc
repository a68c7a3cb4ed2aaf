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

#include "fusionchain/zn_linalg.h"

#include <cmath>
#include <numeric>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

struct Egcd {
    long long g, s, t;
};

Egcd egcd(long long a, long long b) {
    if (a != 0 && b % a == 0) {
        return {a, 1, 0};
    }
    long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        long long q = a / b;
        long long r = a - q * b;
        a = b;
        b = r;
        long long s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        long long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return {a, s0, t0};
}

long long inverse_mod(long long a, long long m) {
    Egcd e = egcd(mod(a, static_cast<int>(m)), m);
    return mod(e.s, static_cast<int>(m));
}

// rows r1, r2 <- [[s, t], [-b/g, a/g]] applied to (r1, r2)
void row_combine(ZnMatrix &m, int r1, int r2, long long s, long long t, long long u, long long v) {
    for (int c = 0; c < m.cols(); c++) {
        long long x = m.at(r1, c), y = m.at(r2, c);
        m.set(r1, c, s * x + t * y);
        m.set(r2, c, u * x + v * y);
    }
}

void col_combine(ZnMatrix &m, int c1, int c2, long long s, long long t, long long u, long long v) {
    for (int r = 0; r < m.rows(); r++) {
        long long x = m.at(r, c1), y = m.at(r, c2);
        m.set(r, c1, s * x + t * y);
        m.set(r, c2, u * x + v * y);
    }
}

}  // namespace

ZnMatrix::ZnMatrix(int modulus, int rows, int cols)
    : n_(modulus), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
    if (modulus < 1) {
        throw InvalidArgument("modulus must be positive");
    }
}

ZnMatrix ZnMatrix::from_columns(int modulus, int rows, const std::vector<std::vector<int>> &columns) {
    ZnMatrix m(modulus, rows, static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); c++) {
        if (static_cast<int>(columns[c].size()) != rows) {
            throw InvalidArgument("column length mismatch");
        }
        for (int r = 0; r < rows; r++) {
            m.set(r, static_cast<int>(c), columns[c][r]);
        }
    }
    return m;
}

void ZnMatrix::set(int r, int c, long long v) {
    data_[static_cast<std::size_t>(r) * cols_ + c] = mod(v, n_);
}

std::vector<int> ZnMatrix::column(int c) const {
    std::vector<int> v(rows_);
    for (int r = 0; r < rows_; r++) {
        v[r] = at(r, c);
    }
    return v;
}

std::vector<std::vector<int>> ZnMatrix::columns() const {
    std::vector<std::vector<int>> out;
    for (int c = 0; c < cols_; c++) {
        out.push_back(column(c));
    }
    return out;
}

ZnMatrix ZnMatrix::operator*(const ZnMatrix &other) const {
    if (cols_ != other.rows_ || n_ != other.n_) {
        throw InvalidArgument("matrix shape mismatch");
    }
    ZnMatrix out(n_, rows_, other.cols_);
    for (int i = 0; i < rows_; i++) {
        for (int k = 0; k < cols_; k++) {
            long long a = at(i, k);
            if (a == 0) {
                continue;
            }
            for (int j = 0; j < other.cols_; j++) {
                out.set(i, j, out.at(i, j) + a * other.at(k, j));
            }
        }
    }
    return out;
}

std::vector<int> ZnMatrix::apply(const std::vector<int> &v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw InvalidArgument("vector length mismatch");
    }
    std::vector<int> out(rows_, 0);
    for (int i = 0; i < rows_; i++) {
        long long s = 0;
        for (int k = 0; k < cols_; k++) {
            s = (s + static_cast<long long>(at(i, k)) * v[k]) % n_;
        }
        out[i] = mod(s, n_);
    }
    return out;
}

ZnMatrix ZnMatrix::transpose() const {
    ZnMatrix out(n_, cols_, rows_);
    for (int i = 0; i < rows_; i++) {
        for (int j = 0; j < cols_; j++) {
            out.set(j, i, at(i, j));
        }
    }
    return out;
}

ZnMatrix ZnMatrix::hcat(const ZnMatrix &other) const {
    if (rows_ != other.rows_ || n_ != other.n_) {
        throw InvalidArgument("matrix shape mismatch");
    }
    ZnMatrix out(n_, rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; i++) {
        for (int j = 0; j < cols_; j++) {
            out.set(i, j, at(i, j));
        }
        for (int j = 0; j < other.cols_; j++) {
            out.set(i, cols_ + j, other.at(i, j));
        }
    }
    return out;
}

SmithForm smith_form(const ZnMatrix &a) {
    int n = a.modulus();
    int rows = a.rows(), cols = a.cols();
    ZnMatrix d = a;
    ZnMatrix u(n, rows, rows), v(n, cols, cols);
    for (int i = 0; i < rows; i++) {
        u.set(i, i, 1);
    }
    for (int i = 0; i < cols; i++) {
        v.set(i, i, 1);
    }
    SmithForm out;
    int t = 0;
    while (t < rows && t < cols) {
        int pr = -1, pc = -1;
        for (int i = t; i < rows && pr < 0; i++) {
            for (int j = t; j < cols; j++) {
                if (d.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr < 0) {
            break;
        }
        if (pr != t) {
            row_combine(d, t, pr, 0, 1, 1, 0);
            row_combine(u, t, pr, 0, 1, 1, 0);
        }
        if (pc != t) {
            col_combine(d, t, pc, 0, 1, 1, 0);
            col_combine(v, t, pc, 0, 1, 1, 0);
        }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < rows; i++) {
                long long b = d.at(i, t);
                if (b == 0) {
                    continue;
                }
                long long p = d.at(t, t);
                Egcd e = egcd(p, b);
                row_combine(d, t, i, e.s, e.t, -b / e.g, p / e.g);
                row_combine(u, t, i, e.s, e.t, -b / e.g, p / e.g);
            }
            for (int j = t + 1; j < cols; j++) {
                long long b = d.at(t, j);
                if (b == 0) {
                    continue;
                }
                long long p = d.at(t, t);
                Egcd e = egcd(p, b);
                col_combine(d, t, j, e.s, e.t, -b / e.g, p / e.g);
                col_combine(v, t, j, e.s, e.t, -b / e.g, p / e.g);
                dirty = true;
            }
            if (dirty) {
                dirty = false;
                for (int i = t + 1; i < rows; i++) {
                    if (d.at(i, t) != 0) {
                        dirty = true;
                        break;
                    }
                }
            }
        }
        if (d.at(t, t) == 0) {
            // pivot annihilated modulo n; the rest of row/column is zero too
            continue;
        }
        out.diag.push_back(d.at(t, t));
        t++;
    }
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

ExactOrder ExactOrder::of(long long value) {
    if (value < 1) {
        throw InvalidArgument("orders are positive");
    }
    ExactOrder o;
    for (long long p = 2; p * p <= value; p++) {
        while (value % p == 0) {
            o.primes_[p]++;
            value /= p;
        }
    }
    if (value > 1) {
        o.primes_[value]++;
    }
    return o;
}

ExactOrder ExactOrder::power(long long base, int exponent) {
    ExactOrder b = of(base);
    for (auto &[p, e] : b.primes_) {
        e *= exponent;
    }
    return b;
}

ExactOrder ExactOrder::operator*(const ExactOrder &other) const {
    ExactOrder o = *this;
    for (auto &[p, e] : other.primes_) {
        if ((o.primes_[p] += e) == 0) {
            o.primes_.erase(p);
        }
    }
    return o;
}

ExactOrder ExactOrder::operator/(const ExactOrder &other) const {
    ExactOrder o = *this;
    for (auto &[p, e] : other.primes_) {
        if ((o.primes_[p] -= e) == 0) {
            o.primes_.erase(p);
        }
    }
    return o;
}

bool ExactOrder::is_integer() const {
    for (auto &[p, e] : primes_) {
        if (e < 0) {
            return false;
        }
    }
    return true;
}

bool ExactOrder::is_square() const {
    for (auto &[p, e] : primes_) {
        if (e % 2 != 0) {
            return false;
        }
    }
    return true;
}

ExactOrder ExactOrder::sqrt() const {
    if (!is_square()) {
        throw InvalidArgument("not a perfect square: " + str());
    }
    ExactOrder o = *this;
    for (auto &[p, e] : o.primes_) {
        e /= 2;
    }
    return o;
}

double ExactOrder::log() const {
    double s = 0;
    for (auto &[p, e] : primes_) {
        s += e * std::log(static_cast<double>(p));
    }
    return s;
}

double ExactOrder::to_double() const {
    double s = 1;
    for (auto &[p, e] : primes_) {
        s *= std::pow(static_cast<double>(p), e);
    }
    return s;
}

std::optional<long long> ExactOrder::to_int() const {
    if (!is_integer()) {
        return std::nullopt;
    }
    long long v = 1;
    for (auto &[p, e] : primes_) {
        for (int k = 0; k < e; k++) {
            if (v > (1LL << 62) / p) {
                return std::nullopt;
            }
            v *= p;
        }
    }
    return v;
}

std::string ExactOrder::str() const {
    if (primes_.empty()) {
        return "1";
    }
    std::string num, den;
    for (auto &[p, e] : primes_) {
        std::string &s = e > 0 ? num : den;
        if (!s.empty()) {
            s += "*";
        }
        s += std::to_string(p);
        if (std::abs(e) != 1) {
            s += "^" + std::to_string(std::abs(e));
        }
    }
    if (num.empty()) {
        num = "1";
    }
    return den.empty() ? num : num + "/" + den;
}

ExactOrder span_order(const ZnMatrix &gens) {
    SmithForm sf = smith_form(gens);
    int n = gens.modulus();
    ExactOrder o;
    for (int d : sf.diag) {
        o = o * ExactOrder::of(n / std::gcd(d, n));
    }
    return o;
}

std::optional<std::vector<int>> zn_solve(const ZnMatrix &gens, const std::vector<int> &v) {
    int n = gens.modulus();
    SmithForm sf = smith_form(gens);
    std::vector<int> c = sf.U.apply(v);
    std::vector<int> w(gens.cols(), 0);
    int r = static_cast<int>(sf.diag.size());
    for (int i = 0; i < static_cast<int>(c.size()); i++) {
        if (i >= r) {
            if (c[i] != 0) {
                return std::nullopt;
            }
            continue;
        }
        long long d = sf.diag[i];
        long long g = std::gcd(d, static_cast<long long>(n));
        if (c[i] % g != 0) {
            return std::nullopt;
        }
        long long m = n / g;
        w[i] = m == 1 ? 0 : mod((c[i] / g) * inverse_mod(d / g, m), static_cast<int>(m));
    }
    return sf.V.apply(w);
}

ZnMatrix zn_kernel(const ZnMatrix &a) {
    int n = a.modulus();
    SmithForm sf = smith_form(a);
    std::vector<std::vector<int>> cols;
    int r = static_cast<int>(sf.diag.size());
    for (int j = 0; j < a.cols(); j++) {
        std::vector<int> e(a.cols(), 0);
        if (j < r) {
            int m = n / std::gcd(sf.diag[j], n);
            if (m == n) {
                continue;
            }
            e[j] = m;
        } else {
            e[j] = 1;
        }
        cols.push_back(sf.V.apply(e));
    }
    return ZnMatrix::from_columns(n, a.cols(), cols);
}

ZnMatrix span_intersection(const ZnMatrix &a, const ZnMatrix &b) {
    int n = a.modulus();
    ZnMatrix negb(n, b.rows(), b.cols());
    for (int i = 0; i < b.rows(); i++) {
        for (int j = 0; j < b.cols(); j++) {
            negb.set(i, j, -static_cast<long long>(b.at(i, j)));
        }
    }
    ZnMatrix k = zn_kernel(a.hcat(negb));
    std::vector<std::vector<int>> cols;
    for (int c = 0; c < k.cols(); c++) {
        std::vector<int> y(a.cols());
        for (int i = 0; i < a.cols(); i++) {
            y[i] = k.at(i, c);
        }
        auto v = a.apply(y);
        bool zero = true;
        for (int x : v) {
            zero = zero && x == 0;
        }
        if (!zero) {
            cols.push_back(v);
        }
    }
    return ZnMatrix::from_columns(n, a.rows(), cols);
}

bool span_contains(const ZnMatrix &b, const ZnMatrix &a) {
    for (int c = 0; c < a.cols(); c++) {
        if (!in_span(b, a.column(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace fusionchain
