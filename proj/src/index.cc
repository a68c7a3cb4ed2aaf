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

#include "fusionchain/index.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

long long as_int(const ExactOrder &o, const std::string &what) {
    auto v = o.to_int();
    if (!v) {
        throw CapExceeded(what + " = " + o.str() + " does not fit a 64-bit integer");
    }
    return *v;
}

}  // namespace

MarkovTrace markov_trace(const WindowAlgebra &w) {
    MarkovTrace t;
    double total = w.trace_of_unit();
    for (auto &b : w.blocks) {
        t.minimal.push_back(b.weight / total);
        t.block.push_back(b.weight * static_cast<double>(b.dim) / total);
    }
    return t;
}

void TracedInclusion::validate(double tol) const {
    int r = small_blocks(), c = large_blocks();
    if (static_cast<int>(lambda.size()) != r || static_cast<int>(small_trace.size()) != r ||
        static_cast<int>(large_trace.size()) != c) {
        throw InvalidArgument("inclusion matrix and block data have inconsistent sizes");
    }
    for (auto &row : lambda) {
        if (static_cast<int>(row.size()) != c) {
            throw InvalidArgument("inclusion matrix rows must have one entry per large block");
        }
        for (auto v : row) {
            if (v < 0) {
                throw InvalidArgument("inclusion multiplicities must be non-negative");
            }
        }
    }
    for (int j = 0; j < c; j++) {
        long long d = 0;
        for (int i = 0; i < r; i++) {
            d += lambda[i][j] * small_dims[i];
        }
        if (d != large_dims[j]) {
            throw InvalidArgument("block " + std::to_string(j) + " has dimension " + std::to_string(large_dims[j]) +
                                  " but the inclusion fills " + std::to_string(d));
        }
    }
    for (int i = 0; i < r; i++) {
        double s = 0;
        for (int j = 0; j < c; j++) {
            s += static_cast<double>(lambda[i][j]) * large_trace[j];
        }
        if (std::abs(s - small_trace[i]) > tol * std::max(1.0, std::abs(s))) {
            throw InvalidArgument("small trace is not the restriction of the large trace on block " +
                                  std::to_string(i));
        }
    }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> TracedInclusion::components() const {
    int r = small_blocks(), c = large_blocks();
    std::vector<int> comp(r + c, -1);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (int start = 0; start < r + c; start++) {
        if (comp[start] >= 0) {
            continue;
        }
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            (v < r ? out[id].first : out[id].second).push_back(v < r ? v : v - r);
            for (int w = 0; w < r + c; w++) {
                bool edge = v < r ? (w >= r && lambda[v][w - r] > 0) : (w < r && lambda[w][v - r] > 0);
                if (edge && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].first.begin(), out[id].first.end());
        std::sort(out[id].second.begin(), out[id].second.end());
    }
    return out;
}

bool TracedInclusion::connected() const {
    return components().size() == 1;
}

TracedInclusion markov_inclusion(const std::vector<std::vector<long long>> &lambda,
                                 const std::vector<long long> &small_dims) {
    TracedInclusion inc;
    inc.lambda = lambda;
    inc.small_dims = small_dims;
    int r = static_cast<int>(lambda.size()), c = r ? static_cast<int>(lambda[0].size()) : 0;
    inc.large_dims.assign(c, 0);
    Eigen::MatrixXd L(r, c);
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < c; j++) {
            L(i, j) = static_cast<double>(lambda[i][j]);
            inc.large_dims[j] += lambda[i][j] * small_dims[i];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L.transpose() * L);
    Eigen::VectorXd t = es.eigenvectors().col(c - 1).cwiseAbs();
    double norm = 0;
    for (int j = 0; j < c; j++) {
        norm += t(j) * static_cast<double>(inc.large_dims[j]);
    }
    t /= norm;
    Eigen::VectorXd s = L * t;
    inc.large_trace.assign(t.data(), t.data() + c);
    inc.small_trace.assign(s.data(), s.data() + r);
    return inc;
}

ExactOrder pauli_center_order(int n, const ZnMatrix &span) {
    int dim = span.rows();
    ZnMatrix a(n, span.cols(), dim);
    for (int g = 0; g < span.cols(); g++) {
        for (int k = 0; k + 1 < dim; k += 2) {
            // omega(s, v) = sum z_s x_v - x_s z_v
            a.set(g, k, span.at(k + 1, g));
            a.set(g, k + 1, -span.at(k, g));
        }
    }
    ZnMatrix perp = zn_kernel(a);
    return span_order(span_intersection(span, perp));
}

namespace {

ZnMatrix pauli_center(int n, const ZnMatrix &span) {
    int dim = span.rows();
    ZnMatrix a(n, span.cols(), dim);
    for (int g = 0; g < span.cols(); g++) {
        for (int k = 0; k + 1 < dim; k += 2) {
            a.set(g, k, span.at(k + 1, g));
            a.set(g, k + 1, -span.at(k, g));
        }
    }
    return span_intersection(span, zn_kernel(a));
}

}  // namespace

TracedInclusion pauli_inclusion(int n, const ZnMatrix &small, const ZnMatrix &large) {
    if (!span_contains(large, small)) {
        throw InvalidArgument("small Pauli span is not contained in the large one");
    }
    ZnMatrix zt = pauli_center(n, small), zs = pauli_center(n, large);
    ExactOrder T = span_order(small), S = span_order(large);
    ExactOrder ZT = span_order(zt), ZS = span_order(zs), K = span_order(span_intersection(zt, zs));
    ExactOrder a2 = T / ZT, b2 = S / ZS;
    if (!a2.is_square() || !b2.is_square()) {
        throw InvariantViolation("Pauli algebra blocks are not square");
    }
    long long a = as_int(a2.sqrt(), "block size"), b = as_int(b2.sqrt(), "block size");
    long long k = as_int(K, "|K|"), rt = as_int(ZT / K, "|Z_T|/|K|"), cs = as_int(ZS / K, "|Z_S|/|K|");
    ExactOrder lam = ExactOrder::of(b) * K / (ExactOrder::of(a) * ZT);
    if (!lam.is_integer()) {
        throw InvariantViolation("non-integral Pauli inclusion multiplicity");
    }
    long long l = as_int(lam, "multiplicity");
    long long r = k * rt, c = k * cs;
    if (r > 4096 || c > 4096) {
        throw CapExceeded("Pauli inclusion has more than 4096 blocks");
    }
    TracedInclusion inc;
    inc.lambda.assign(r, std::vector<long long>(c, 0));
    for (long long g = 0; g < k; g++) {
        for (long long i = 0; i < rt; i++) {
            for (long long j = 0; j < cs; j++) {
                inc.lambda[g * rt + i][g * cs + j] = l;
            }
        }
    }
    inc.small_dims.assign(r, a);
    inc.large_dims.assign(c, b);
    inc.small_trace.assign(r, 1.0 / (static_cast<double>(r) * static_cast<double>(a)));
    inc.large_trace.assign(c, 1.0 / (static_cast<double>(c) * static_cast<double>(b)));
    (void)mod;
    return inc;
}

WatataniResult watatani_blocks(const TracedInclusion &inc, double tol) {
    inc.validate(tol);
    int r = inc.small_blocks(), c = inc.large_blocks();
    WatataniResult out;
    // quasi-basis u = sqrt(s_i / t_j) e^{(j)}_{p, o}, o the first row of a copy of block i in block j,
    // so sum u u^* = (sum_i lambda_ij s_i / t_j) on block j
    for (int j = 0; j < c; j++) {
        double v = 0;
        for (int i = 0; i < r; i++) {
            v += static_cast<double>(inc.lambda[i][j]) * inc.small_trace[i];
        }
        out.per_block.push_back(v / inc.large_trace[j]);
    }
    double lo = *std::min_element(out.per_block.begin(), out.per_block.end());
    double hi = *std::max_element(out.per_block.begin(), out.per_block.end());
    out.scalar = hi - lo <= tol * std::max(1.0, hi);
    out.value = hi;

    long long total = 0;
    for (auto b : inc.large_dims) {
        total += b;
    }
    if (total > 24) {
        return out;
    }
    // explicit check on matrices: E(y)_i = (1/s_i) sum_j t_j sum_copies y_j[copy]; sum u E(u^* y) = y
    struct Copy {
        int i, j;
        long long offset;
    };
    std::vector<Copy> copies;
    std::vector<long long> block_offset(c, 0);
    for (int j = 0, off = 0; j < c; j++) {
        block_offset[j] = off;
        long long o = off;
        for (int i = 0; i < r; i++) {
            for (long long k = 0; k < inc.lambda[i][j]; k++) {
                copies.push_back({i, j, o});
                o += inc.small_dims[i];
            }
        }
        off += static_cast<int>(inc.large_dims[j]);
    }
    auto expect = [&](const Matrix &y) {
        std::vector<Matrix> e(r);
        for (int i = 0; i < r; i++) {
            e[i] = Matrix::Zero(inc.small_dims[i], inc.small_dims[i]);
        }
        for (auto &cp : copies) {
            long long a = inc.small_dims[cp.i];
            e[cp.i] += inc.large_trace[cp.j] / inc.small_trace[cp.i] * y.block(cp.offset, cp.offset, a, a);
        }
        Matrix out = Matrix::Zero(total, total);
        for (auto &cp : copies) {
            long long a = inc.small_dims[cp.i];
            out.block(cp.offset, cp.offset, a, a) = e[cp.i];
        }
        return out;
    };
    std::vector<Matrix> basis;
    for (auto &cp : copies) {
        for (long long p = 0; p < inc.large_dims[cp.j]; p++) {
            Matrix u = Matrix::Zero(total, total);
            u(block_offset[cp.j] + p, cp.offset) = std::sqrt(inc.small_trace[cp.i] / inc.large_trace[cp.j]);
            basis.push_back(u);
        }
    }
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> nd;
    Matrix y = Matrix::Zero(total, total);
    for (int j = 0; j < c; j++) {
        for (long long p = 0; p < inc.large_dims[j]; p++) {
            for (long long q = 0; q < inc.large_dims[j]; q++) {
                y(block_offset[j] + p, block_offset[j] + q) = {nd(rng), nd(rng)};
            }
        }
    }
    Matrix rebuilt = Matrix::Zero(total, total), ind = Matrix::Zero(total, total);
    for (auto &u : basis) {
        rebuilt += u * expect(u.adjoint() * y);
        ind += u * u.adjoint();
    }
    if ((rebuilt - y).norm() > 1e-9 * std::max(1.0, y.norm())) {
        throw InvariantViolation("quasi-basis does not reconstruct the large algebra");
    }
    for (int j = 0; j < c; j++) {
        for (long long p = 0; p < inc.large_dims[j]; p++) {
            if (std::abs(ind(block_offset[j] + p, block_offset[j] + p) - out.per_block[j]) > 1e-9 * out.per_block[j]) {
                throw InvariantViolation("quasi-basis index element disagrees with the block formula");
            }
        }
    }
    out.quasi_basis_checked = true;
    return out;
}

double watatani_index(const TracedInclusion &inc, double tol) {
    if (!inc.connected()) {
        std::string detail;
        for (auto &[s, l] : inc.components()) {
            detail += " [" + std::to_string(s.size()) + " small, " + std::to_string(l.size()) + " large]";
        }
        throw DisconnectedInclusion("inclusion has " + std::to_string(inc.components().size()) + " components:" +
                                    detail);
    }
    auto w = watatani_blocks(inc, tol);
    if (!w.scalar) {
        throw InvariantViolation("index element is not scalar for this trace");
    }
    return w.value;
}

double markov_index(const TracedInclusion &inc) {
    int r = inc.small_blocks(), c = inc.large_blocks();
    Eigen::MatrixXd L(r, c);
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < c; j++) {
            L(i, j) = static_cast<double>(inc.lambda[i][j]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L.transpose() * L);
    return es.eigenvalues().maxCoeff();
}

namespace {

using SourceFn = std::function<std::vector<PauliString>(int lo, int hi)>;
using ImageFn = std::function<PauliString(const PauliString &)>;

ZnMatrix span_of(int n, int lo, int hi, const std::vector<PauliString> &ps) {
    std::vector<std::vector<int>> cols;
    for (auto &p : ps) {
        cols.push_back(p.symplectic(lo, hi));
    }
    if (cols.empty()) {
        cols.push_back(std::vector<int>(2 * static_cast<std::size_t>(hi - lo + 1), 0));
    }
    return ZnMatrix::from_columns(n, 2 * (hi - lo + 1), cols);
}

IndexEstimate estimate(const std::string &subject, int n, const SourceFn &sources, const ImageFn &image, int R,
                       int Rinv, const std::vector<int> &scales, int buffer, double tol) {
    if (scales.empty()) {
        throw InvalidArgument("index estimate needs at least one scale");
    }
    if (buffer < 0) {
        throw InvalidArgument("buffer must be non-negative");
    }
    IndexEstimate est;
    est.subject = subject;
    est.tolerance = tol;
    est.buffer = buffer;
    bool contained = true;
    for (int s : scales) {
        if (s < 1 || s > 40) {
            throw InvalidArgument("scale " + std::to_string(s) + " outside [1, 40]");
        }
        int x = 0, N = s - 1;
        int lo = x - R - 1, hi = N + Rinv + R + 1;
        ZnMatrix m0 = span_of(n, lo, hi, sources(x, N));
        std::vector<PauliString> imgs;
        for (auto &p : sources(x, N + Rinv)) {
            imgs.push_back(image(p));
        }
        std::vector<PauliString> window;
        for (int i = x - R; i <= N; i++) {
            window.push_back(PauliString::x(n, i));
            window.push_back(PauliString::z(n, i));
        }
        ZnMatrix m1 = span_intersection(span_of(n, lo, hi, imgs), span_of(n, lo, hi, window));
        int y = x + std::max(R, Rinv) + buffer;
        if (y <= N) {
            ZnMatrix n0 = span_of(n, lo, hi, sources(y, N));
            contained = contained && span_contains(m1, n0) && span_contains(m0, n0);
        }
        ExactOrder sq = span_order(m1) / span_order(m0);
        est.scales.push_back(s);
        est.squared.push_back(sq);
        est.values.push_back(std::sqrt(sq.to_double()));
    }
    est.value = est.values.back();
    if (!contained) {
        est.note = "buffer algebra not contained in both truncations";
        est.converged = false;
        return est;
    }
    est.converged = est.values.size() >= 2 && std::abs(est.values.back() - est.values[est.values.size() - 2]) < tol;
    if (est.values.size() < 2) {
        est.note = "a single scale cannot establish convergence";
    }
    return est;
}

std::vector<PauliString> symmetric_sources(int n, int lo, int hi) {
    std::vector<PauliString> out;
    for (int i = lo; i <= hi; i++) {
        out.push_back(DualitySpec::source(n, Generator::X, i));
        if (i < hi) {
            out.push_back(DualitySpec::source(n, Generator::B, i));
        }
    }
    return out;
}

std::vector<PauliString> full_sources(int n, int lo, int hi) {
    std::vector<PauliString> out;
    for (int i = lo; i <= hi; i++) {
        out.push_back(PauliString::x(n, i));
        out.push_back(PauliString::z(n, i));
    }
    return out;
}

int extension_inverse_spread(const ExtensionTable &ext, int W) {
    int n = ext.n, R = ext.spread();
    auto srcs = full_sources(n, -W, W);
    std::vector<PauliString> imgs;
    for (auto &p : srcs) {
        imgs.push_back(ext.apply(p));
    }
    int lo = -W - R, hi = W + R;
    ZnMatrix m = span_of(n, lo, hi, imgs);
    int spread = 0;
    for (auto &t : {PauliString::x(n, 0), PauliString::z(n, 0)}) {
        auto y = zn_solve(m, t.symplectic(lo, hi));
        if (!y) {
            throw InvariantViolation(ext.name + " has no local inverse within radius " + std::to_string(W));
        }
        for (std::size_t k = 0; k < srcs.size(); k++) {
            if ((*y)[k]) {
                spread = std::max(spread, std::abs(srcs[k].min_site()));
            }
        }
    }
    return spread;
}

}  // namespace

IndexEstimate ind_estimate(const DualitySpec &spec, const std::vector<int> &scales, int buffer, double tol) {
    int n = spec.n;
    int R = spec.measured_spread();
    int Rinv = inverse(spec).measured_spread();
    auto est = estimate(
        spec.name, n, [n](int lo, int hi) { return symmetric_sources(n, lo, hi); },
        [&spec](const PauliString &p) { return spec.apply(p); }, R, Rinv, scales, buffer, tol);
    if (est.note.empty()) {
        est.note = "numerical finite-scale value on the symmetric chain";
    }
    return est;
}

IndexEstimate ind_estimate(const ShiftDescriptor &desc, const std::vector<int> &scales, int buffer, double tol) {
    if (!desc.table) {
        throw UnsupportedExtension(desc.name + " carries no generator table to estimate from");
    }
    auto est = ind_estimate(*desc.table, scales, buffer, tol);
    est.subject = desc.name;
    if (desc.categorical_index) {
        est.note = "numerical finite-scale value; categorical dimension d_Y = " + std::to_string(*desc.categorical_index);
    }
    return est;
}

IndexEstimate ind_estimate(const ExtensionTable &ext, const std::vector<int> &scales, int buffer, double tol) {
    int n = ext.n;
    int R = ext.spread();
    int Rinv = extension_inverse_spread(ext, 4);
    auto est = estimate(
        ext.name, n, [n](int lo, int hi) { return full_sources(n, lo, hi); },
        [&ext](const PauliString &p) { return ext.apply(p); }, R, Rinv, scales, buffer, tol);
    if (est.note.empty()) {
        est.note = "numerical finite-scale value on the full chain";
    }
    return est;
}

}  // namespace fusionchain
