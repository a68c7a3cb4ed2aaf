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

#include "fusionchain/chainalg.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

using cd = std::complex<double>;

IntSquare mat_mul(const IntSquare &a, const IntSquare &b) {
    std::size_t r = a.size();
    IntSquare c(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t k = 0; k < r; k++) {
            if (!a[i][k]) {
                continue;
            }
            for (std::size_t j = 0; j < r; j++) {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return c;
}

IntSquare mat_pow(const IntSquare &a, int n) {
    std::size_t r = a.size();
    IntSquare p(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; i++) {
        p[i][i] = 1;
    }
    for (int k = 0; k < n; k++) {
        p = mat_mul(p, a);
    }
    return p;
}

// Perron-Frobenius eigenvalue and eigenvector of a nonnegative matrix, via A + I.
std::pair<double, std::vector<double>> perron(const IntSquare &a, bool transpose) {
    std::size_t r = a.size();
    std::vector<double> v(r, 1.0), w(r);
    double lambda = 0;
    for (int it = 0; it < 200000; it++) {
        double norm = 0;
        for (std::size_t i = 0; i < r; i++) {
            w[i] = v[i];
            for (std::size_t j = 0; j < r; j++) {
                w[i] += (transpose ? a[j][i] : a[i][j]) * v[j];
            }
            norm += w[i];
        }
        double change = 0;
        double vsum = 0;
        for (std::size_t i = 0; i < r; i++) {
            vsum += v[i];
        }
        lambda = norm / vsum - 1.0;
        for (std::size_t i = 0; i < r; i++) {
            w[i] /= norm;
            change = std::max(change, std::abs(w[i] - v[i] / vsum));
        }
        for (std::size_t i = 0; i < r; i++) {
            v[i] = w[i];
        }
        if (change < 1e-16) {
            break;
        }
    }
    return {lambda, v};
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; i++) {
        r *= b;
    }
    return r;
}

// Orthonormalize matrices under <x, y> = tr(x^dagger y) / D.
std::vector<Matrix> orthonormalize(std::vector<Matrix> in, double tol) {
    std::vector<Matrix> out;
    for (auto &m : in) {
        Matrix v = m;
        double D = static_cast<double>(v.rows());
        for (auto &q : out) {
            v -= ((q.adjoint() * v).trace() / D) * q;
        }
        double norm = std::sqrt(std::abs((v.adjoint() * v).trace()) / D);
        if (norm > tol) {
            out.push_back(v / norm);
        }
    }
    return out;
}

}  // namespace

EdgeGraph edge_graph(const ModuleCategorySpec &module, const ObjectExpr &x) {
    if (!module.is_indecomposable()) {
        throw DecomposableModule("module category " + module.name + " is decomposable");
    }
    EdgeGraph g;
    g.vertices = module.labels;
    auto act = module.object_action(x);
    int r = module.rank();
    g.adjacency.assign(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++) {
            g.adjacency[i][j] = act[i][j];
            for (int k = 0; k < act[i][j]; k++) {
                g.edges.push_back({i, j, k});
            }
        }
    }
    // strongly connected and aperiodic checks on the adjacency pattern
    IntSquare reach = g.adjacency;
    for (auto &row : reach) {
        for (auto &v : row) {
            v = v > 0;
        }
    }
    IntSquare power = reach;
    bool all_positive = false;
    IntSquare closure = reach;
    for (int k = 1; k <= r * r + 1 && !all_positive; k++) {
        all_positive = true;
        for (auto &row : power) {
            for (auto v : row) {
                all_positive = all_positive && v > 0;
            }
        }
        if (!all_positive) {
            power = mat_mul(power, reach);
            for (auto &row : power) {
                for (auto &v : row) {
                    v = v > 0;
                }
            }
            for (int i = 0; i < r; i++) {
                for (int j = 0; j < r; j++) {
                    closure[i][j] = closure[i][j] || power[i][j];
                }
            }
        }
    }
    g.primitive = all_positive;
    g.connected = true;
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++) {
            g.connected = g.connected && (closure[i][j] > 0 || all_positive);
        }
    }
    return g;
}

long long WindowAlgebra::dimension() const {
    long long s = 0;
    for (auto &b : blocks) {
        s += b.dim * b.dim;
    }
    return s;
}

double WindowAlgebra::trace_of_unit() const {
    double s = 0;
    for (auto &b : blocks) {
        s += b.dim * b.weight;
    }
    return s;
}

WindowAlgebra window_algebra(const EdgeGraph &graph, int n) {
    if (n < 1) {
        throw InvalidArgument("window length must be at least 1");
    }
    WindowAlgebra w;
    w.form = WindowAlgebra::Form::Edge;
    w.n = n;
    auto p = mat_pow(graph.adjacency, n);
    auto [lambda, right] = perron(graph.adjacency, false);
    auto [lambda_l, left] = perron(graph.adjacency, true);
    (void)lambda_l;
    double norm = 0;
    int r = graph.vertex_count();
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++) {
            norm += left[i] * static_cast<double>(p[i][j]) * right[j];
        }
    }
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++) {
            if (p[i][j] == 0) {
                continue;
            }
            w.blocks.push_back({graph.vertices[i] + "->" + graph.vertices[j], i, j, p[i][j], left[i] * right[j] / norm});
        }
    }
    (void)lambda;
    return w;
}

WindowAlgebra window_algebra(const FusionCategorySpec &spec, const ObjectExpr &x, int n) {
    WindowAlgebra w;
    w.form = WindowAlgebra::Form::Abstract;
    w.n = n;
    auto m = power_decompose(spec, x, n);
    double dx = std::pow(x.dimension(spec), n);
    for (int c = 0; c < spec.rank(); c++) {
        if (m.mult[c] == 0) {
            continue;
        }
        w.blocks.push_back({spec.labels[c], c, -1, m.mult[c], spec.qdims[c] / dx});
    }
    return w;
}

FusionChain::FusionChain(FusionCategorySpec spec, ObjectExpr x) : spec_(std::move(spec)), x_(std::move(x)) {
    if (static_cast<int>(x_.mult.size()) != spec_.rank()) {
        throw InvalidArgument("object does not match category " + spec_.name);
    }
    if (!spec_.multiplicity_free()) {
        throw UnsupportedSystem("path bases need a multiplicity-free fusion ring");
    }
    for (int a = 0; a < spec_.rank(); a++) {
        for (int k = 0; k < x_.mult[a]; k++) {
            channels_.push_back(a);
        }
    }
    dim_x_ = x_.dimension(spec_);
}

std::vector<std::vector<FusionPath>> FusionChain::paths(int n) const {
    std::vector<std::vector<FusionPath>> out(spec_.rank());
    FusionPath cur;
    std::function<void(int)> rec = [&](int last) {
        if (static_cast<int>(cur.sites.size()) == n) {
            out[last].push_back(cur);
            return;
        }
        for (std::size_t s = 0; s < channels_.size(); s++) {
            int a = channels_[s];
            for (int c = 0; c < spec_.rank(); c++) {
                if (!spec_.N[last][a][c]) {
                    continue;
                }
                cur.sites.push_back(static_cast<int>(s));
                cur.intermediates.push_back(c);
                rec(c);
                cur.sites.pop_back();
                cur.intermediates.pop_back();
            }
        }
    };
    rec(0);
    return out;
}

FusionChain::Element FusionChain::identity(int n) const {
    auto p = paths(n);
    Element e;
    e.n = n;
    for (auto &v : p) {
        e.blocks.push_back(Matrix::Identity(v.size(), v.size()));
    }
    return e;
}

FusionChain::Element FusionChain::zero(int n) const {
    auto p = paths(n);
    Element e;
    e.n = n;
    for (auto &v : p) {
        e.blocks.push_back(Matrix::Zero(v.size(), v.size()));
    }
    return e;
}

FusionChain::Element FusionChain::multiply(const Element &a, const Element &b) const {
    if (a.n != b.n) {
        throw InvalidArgument("window lengths differ");
    }
    Element e;
    e.n = a.n;
    for (std::size_t c = 0; c < a.blocks.size(); c++) {
        e.blocks.push_back(a.blocks[c] * b.blocks[c]);
    }
    return e;
}

FusionChain::Element FusionChain::adjoint(const Element &a) const {
    Element e;
    e.n = a.n;
    for (auto &m : a.blocks) {
        e.blocks.push_back(m.adjoint());
    }
    return e;
}

std::complex<double> FusionChain::trace(const Element &a) const {
    std::complex<double> s = 0;
    double dx = std::pow(dim_x_, a.n);
    for (std::size_t c = 0; c < a.blocks.size(); c++) {
        if (a.blocks[c].size() > 0) {
            s += spec_.qdims[c] / dx * a.blocks[c].trace();
        }
    }
    return s;
}

double FusionChain::distance(const Element &a, const Element &b) const {
    double d = 0;
    for (std::size_t c = 0; c < a.blocks.size(); c++) {
        if (a.blocks[c].size() > 0) {
            d = std::max(d, (a.blocks[c] - b.blocks[c]).cwiseAbs().maxCoeff());
        }
    }
    return d;
}

std::vector<Matrix> FusionChain::left_recoupling(int n) const {
    if (spec_.fkind == FKind::None) {
        throw FSymbolsMissing("left window inclusion needs F-symbols for " + spec_.name);
    }
    auto old_paths = paths(n);
    auto new_paths = paths(n + 1);
    int r = spec_.rank();
    std::vector<Matrix> out(r);
    for (int c = 0; c < r; c++) {
        // columns: (channel s0, old path E) with a (x) e_n -> c
        std::vector<std::pair<int, const FusionPath *>> cols;
        for (std::size_t s = 0; s < channels_.size(); s++) {
            int a = channels_[s];
            for (int e = 0; e < r; e++) {
                if (!spec_.N[a][e][c]) {
                    continue;
                }
                for (auto &p : old_paths[e]) {
                    cols.push_back({static_cast<int>(s), &p});
                }
            }
        }
        auto &rows = new_paths[c];
        if (rows.size() != cols.size()) {
            throw InvariantViolation("recoupling basis sizes disagree");
        }
        Matrix u = Matrix::Zero(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); i++) {
            const FusionPath &P = rows[i];
            for (std::size_t j = 0; j < cols.size(); j++) {
                auto [s0, E] = cols[j];
                if (P.sites[0] != s0 || !std::equal(E->sites.begin(), E->sites.end(), P.sites.begin() + 1)) {
                    continue;
                }
                int a = channels_[s0];
                cd coeff = 1.0;
                // new intermediates h_1..h_{n+1} = P.intermediates[0..n]; old e_1..e_n = E->intermediates[0..n-1]
                for (int k = 2; k <= n; k++) {
                    int e_prev = E->intermediates[k - 2];
                    int e_k = E->intermediates[k - 1];
                    int x_k = channels_[E->sites[k - 1]];
                    int h_k = P.intermediates[k - 1];
                    int h_next = P.intermediates[k];
                    coeff *= std::conj(spec_.F(a, e_prev, x_k, h_next, h_k, e_k));
                }
                if (n >= 1 && !spec_.N[a][E->intermediates[0]][P.intermediates[1]]) {
                    coeff = 0;
                }
                u(i, j) = coeff;
            }
        }
        out[c] = u;
    }
    return out;
}

FusionChain::Element FusionChain::include_left(const Element &f) const {
    int n = f.n;
    int r = spec_.rank();
    auto old_paths = paths(n);
    auto us = left_recoupling(n);
    Element out;
    out.n = n + 1;
    for (int c = 0; c < r; c++) {
        std::vector<std::pair<int, int>> cols;  // (s0, e_n) with local index into old_paths[e_n]
        std::vector<int> local;
        for (std::size_t s = 0; s < channels_.size(); s++) {
            int a = channels_[s];
            for (int e = 0; e < r; e++) {
                if (!spec_.N[a][e][c]) {
                    continue;
                }
                for (std::size_t k = 0; k < old_paths[e].size(); k++) {
                    cols.push_back({static_cast<int>(s), e});
                    local.push_back(static_cast<int>(k));
                }
            }
        }
        Matrix d = Matrix::Zero(cols.size(), cols.size());
        for (std::size_t i = 0; i < cols.size(); i++) {
            for (std::size_t j = 0; j < cols.size(); j++) {
                if (cols[i] == cols[j]) {
                    d(i, j) = f.blocks[cols[i].second](local[i], local[j]);
                }
            }
        }
        out.blocks.push_back(us[c] * d * us[c].adjoint());
    }
    return out;
}

FusionChain::Element FusionChain::include_right(const Element &f) const {
    int n = f.n;
    int r = spec_.rank();
    auto old_paths = paths(n);
    auto new_paths = paths(n + 1);
    std::vector<std::map<std::vector<int>, int>> index(r);
    for (int e = 0; e < r; e++) {
        for (std::size_t k = 0; k < old_paths[e].size(); k++) {
            auto key = old_paths[e][k].sites;
            key.insert(key.end(), old_paths[e][k].intermediates.begin(), old_paths[e][k].intermediates.end());
            index[e][key] = static_cast<int>(k);
        }
    }
    Element out;
    out.n = n + 1;
    for (int c = 0; c < r; c++) {
        auto &ps = new_paths[c];
        Matrix m = Matrix::Zero(ps.size(), ps.size());
        std::vector<int> prefix_label(ps.size()), prefix_idx(ps.size());
        for (std::size_t i = 0; i < ps.size(); i++) {
            std::vector<int> key(ps[i].sites.begin(), ps[i].sites.end() - 1);
            key.insert(key.end(), ps[i].intermediates.begin(), ps[i].intermediates.end() - 1);
            prefix_label[i] = n == 0 ? 0 : ps[i].intermediates[n - 1];
            prefix_idx[i] = index[prefix_label[i]].at(key);
        }
        for (std::size_t i = 0; i < ps.size(); i++) {
            for (std::size_t j = 0; j < ps.size(); j++) {
                if (ps[i].sites.back() == ps[j].sites.back() && prefix_label[i] == prefix_label[j]) {
                    m(i, j) = f.blocks[prefix_label[i]](prefix_idx[i], prefix_idx[j]);
                }
            }
        }
        out.blocks.push_back(m);
    }
    return out;
}

FusionChain::Element FusionChain::include(const Element &f, int target, int offset) const {
    if (offset < 0 || target < f.n + offset) {
        throw InvalidArgument("window does not fit inside the target window");
    }
    Element cur = f;
    for (int k = 0; k < offset; k++) {
        cur = include_left(cur);
    }
    while (cur.n < target) {
        cur = include_right(cur);
    }
    return cur;
}

Matrix regular_rep(const FiniteAbelianGroup &group, const Element &g) {
    int d = group.order();
    Matrix m = Matrix::Zero(d, d);
    for (int h = 0; h < d; h++) {
        m(group.index_of(group.add(group.reduce(g), group.element(h))), h) = 1.0;
    }
    return m;
}

Matrix group_mpo(const FiniteAbelianGroup &group, const Element &g, int n) {
    Matrix r = regular_rep(group, g);
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < n; i++) {
        out = kron(out, r);
    }
    return out;
}

Matrix clock_matrix(int n) {
    Matrix m = Matrix::Zero(n, n);
    for (int h = 0; h < n; h++) {
        m(h, h) = Phase(h, n).value();
    }
    return m;
}

Matrix embed(const Matrix &op, int d, int n, int site, int width) {
    if (site < 0 || site + width > n) {
        throw InvalidArgument("operator does not fit in the window");
    }
    long long left = ipow(d, site), right = ipow(d, n - site - width);
    return kron(kron(Matrix::Identity(left, left), op), Matrix::Identity(right, right));
}

long long Commutant::dimension() const {
    if (!structured) {
        return static_cast<long long>(explicit_basis.size());
    }
    long long s = 0;
    for (int b : block_sizes) {
        s += static_cast<long long>(b) * b;
    }
    return s;
}

std::vector<Matrix> Commutant::basis() const {
    if (!structured) {
        return explicit_basis;
    }
    std::vector<Matrix> out;
    double scale = std::sqrt(static_cast<double>(total_dim));
    int offset = 0;
    for (int b : block_sizes) {
        for (int i = 0; i < b; i++) {
            for (int j = 0; j < b; j++) {
                out.push_back(scale * V.col(offset + i) * V.col(offset + j).adjoint());
            }
        }
        offset += b;
    }
    return out;
}

Matrix Commutant::project(const Matrix &x) const {
    if (!structured) {
        Matrix out = Matrix::Zero(x.rows(), x.cols());
        double D = static_cast<double>(total_dim);
        for (auto &q : explicit_basis) {
            out += ((q.adjoint() * x).trace() / D) * q;
        }
        return out;
    }
    Matrix y = V.adjoint() * x * V;
    Matrix z = Matrix::Zero(y.rows(), y.cols());
    int offset = 0;
    for (int b : block_sizes) {
        z.block(offset, offset, b, b) = y.block(offset, offset, b, b);
        offset += b;
    }
    return V * z * V.adjoint();
}

Commutant commutant_basis(const std::vector<Matrix> &generators, long long cap) {
    if (generators.empty()) {
        throw InvalidArgument("commutant needs at least one operator");
    }
    Eigen::Index D = generators[0].rows();
    if (D > cap) {
        throw CapExceeded("window dimension " + std::to_string(D) + " exceeds commutant cap " + std::to_string(cap));
    }
    for (auto &g : generators) {
        if (g.rows() != D || g.cols() != D) {
            throw InvalidArgument("operators must be square and of equal size");
        }
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Matrix h = Matrix::Zero(D, D);
    const cd I(0, 1);
    auto add_term = [&](const Matrix &m) {
        h += coef(rng) * (m + m.adjoint());
        h += coef(rng) * I * (m - m.adjoint());
    };
    for (std::size_t i = 0; i < generators.size(); i++) {
        add_term(generators[i]);
        for (std::size_t j = 0; j < generators.size(); j++) {
            add_term(generators[i] * generators[j]);
            add_term(generators[i] * generators[j].adjoint());
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const auto &ev = es.eigenvalues();
    Matrix V = es.eigenvectors();
    double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<int> sizes;
    int start = 0;
    for (Eigen::Index k = 1; k <= D; k++) {
        if (k == D || ev(k) - ev(k - 1) > 1e-7 * scale) {
            sizes.push_back(static_cast<int>(k - start));
            start = static_cast<int>(k);
        }
    }
    Commutant out;
    out.total_dim = static_cast<int>(D);
    out.V = V;
    out.block_sizes = sizes;
    bool scalar = true;
    int offset = 0;
    for (int b : sizes) {
        Matrix vb = V.middleCols(offset, b);
        for (auto &g : generators) {
            Matrix gb = g * vb;
            Matrix proj = vb.adjoint() * gb;
            cd mu = proj.trace() / static_cast<double>(b);
            double resid = (gb - mu * vb).norm();
            if (resid > 1e-9 * std::max(1.0, g.norm())) {
                scalar = false;
            }
        }
        offset += b;
    }
    if (scalar) {
        return out;
    }
    // general case: x is block diagonal in the eigenbasis of h; solve [g', X] = 0 with SVD
    long long unknowns = 0;
    for (int b : sizes) {
        unknowns += static_cast<long long>(b) * b;
    }
    if (unknowns > cap) {
        throw CapExceeded("reduced commutant system has " + std::to_string(unknowns) + " unknowns");
    }
    std::vector<std::pair<int, int>> var;  // matrix position in V basis for each unknown
    offset = 0;
    for (int b : sizes) {
        for (int i = 0; i < b; i++) {
            for (int j = 0; j < b; j++) {
                var.push_back({offset + i, offset + j});
            }
        }
        offset += b;
    }
    Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(generators.size()) * D * D, unknowns);
    for (std::size_t gi = 0; gi < generators.size(); gi++) {
        Matrix gp = V.adjoint() * generators[gi] * V;
        for (long long u = 0; u < unknowns; u++) {
            auto [p, q] = var[u];
            // [g', E_pq] = g' E_pq - E_pq g'
            Matrix c = Matrix::Zero(D, D);
            c.col(q) += gp.col(p);
            c.row(p) -= gp.row(q);
            sys.block(gi * D * D, u, D * D, 1) = Eigen::Map<Eigen::VectorXcd>(c.data(), D * D);
        }
    }
    Matrix gram = sys.adjoint() * sys;
    Eigen::SelfAdjointEigenSolver<Matrix> ns(gram);
    const auto &lam = ns.eigenvalues();
    double lmax = std::max(1.0, lam.cwiseAbs().maxCoeff());
    std::vector<Matrix> basis;
    for (long long u = 0; u < unknowns; u++) {
        if (lam(u) > 1e-9 * lmax) {
            continue;
        }
        Matrix x = Matrix::Zero(D, D);
        for (long long k = 0; k < unknowns; k++) {
            auto [p, q] = var[k];
            x(p, q) = ns.eigenvectors()(k, u);
        }
        basis.push_back(V * x * V.adjoint());
    }
    out.structured = false;
    out.explicit_basis = orthonormalize(std::move(basis), 1e-9);
    return out;
}

Commutant symmetric_commutant(const FiniteAbelianGroup &group, int n, long long cap) {
    long long D = ipow(group.order(), n);
    if (D > cap) {
        throw CapExceeded("window dimension " + std::to_string(D) + " exceeds commutant cap " + std::to_string(cap));
    }
    std::vector<Matrix> gens;
    for (int i = 0; i < group.rank(); i++) {
        gens.push_back(group_mpo(group, group.generator(i), n));
    }
    if (gens.empty()) {
        gens.push_back(Matrix::Identity(D, D));
    }
    return commutant_basis(gens, cap);
}

AmbientStability ambient_stability(const FiniteAbelianGroup &group, int window, int ambient, long long cap) {
    if (ambient < window) {
        throw InvalidArgument("ambient window must contain the window");
    }
    AmbientStability out;
    out.window = window;
    out.ambient = ambient;
    int d = group.order();
    long long Di = ipow(d, window);
    auto dim_at = [&](int J) -> long long {
        long long Dj = ipow(d, J);
        if (Dj > cap) {
            throw CapExceeded("ambient dimension " + std::to_string(Dj) + " exceeds cap " + std::to_string(cap));
        }
        long long rest = Dj / Di;
        Matrix sys = Matrix::Zero(static_cast<Eigen::Index>(group.rank()) * Dj * Dj, Di * Di);
        for (int gi = 0; gi < group.rank(); gi++) {
            Matrix u = group_mpo(group, group.generator(gi), J);
            for (long long p = 0; p < Di; p++) {
                for (long long q = 0; q < Di; q++) {
                    Matrix e = Matrix::Zero(Di, Di);
                    e(p, q) = 1.0;
                    Matrix x = kron(e, Matrix::Identity(rest, rest));
                    Matrix c = x * u - u * x;
                    sys.block(gi * Dj * Dj, p * Di + q, Dj * Dj, 1) = Eigen::Map<Eigen::VectorXcd>(c.data(), Dj * Dj);
                }
            }
        }
        Eigen::ColPivHouseholderQR<Matrix> qr(sys);
        qr.setThreshold(1e-9);
        return Di * Di - qr.rank();
    };
    out.dimension = dim_at(ambient);
    out.dimension_next = dim_at(ambient + 1);
    out.stable = out.dimension == out.dimension_next;
    return out;
}

Matrix conditional_expectation(const Matrix &x, const FiniteAbelianGroup &group, int n) {
    Matrix acc = Matrix::Zero(x.rows(), x.cols());
    for (auto &g : group.elements()) {
        Matrix u = group_mpo(group, g, n);
        acc += u * x * u.adjoint();
    }
    return acc / static_cast<double>(group.order());
}

Eigen::VectorXd edge_constraint_projector(const EdgeGraph &graph, int n, int i) {
    int d = graph.site_dimension();
    if (i < 0 || i + 1 >= n) {
        throw InvalidArgument("edge constraint needs sites i and i+1 inside the window");
    }
    long long D = ipow(d, n);
    Eigen::VectorXd p(D);
    long long stride_i = ipow(d, n - 1 - i), stride_j = ipow(d, n - 2 - i);
    for (long long idx = 0; idx < D; idx++) {
        int si = static_cast<int>((idx / stride_i) % d);
        int sj = static_cast<int>((idx / stride_j) % d);
        p(idx) = graph.edges[si].target == graph.edges[sj].source ? 1.0 : 0.0;
    }
    return p;
}

long long extended_window_dims(const FiniteAbelianGroup &group, const std::vector<Element> &lagrangian_support, int n) {
    FiniteAbelianGroup big = group.product(group);
    std::set<int> members;
    for (auto &l : lagrangian_support) {
        if (!big.is_valid(l)) {
            throw NotSubgroup("element " + big.format(l) + " is not in A x dual(A)");
        }
        members.insert(big.index_of(l));
    }
    if (!members.count(0)) {
        throw NotSubgroup("support does not contain the unit");
    }
    for (int a : members) {
        for (int b : members) {
            if (!members.count(big.index_of(big.add(big.element(a), big.element(b))))) {
                throw NotSubgroup("support is not closed under fusion");
            }
        }
    }
    auto spec = pointed_category(group);
    std::vector<int> all(group.order());
    for (int i = 0; i < group.order(); i++) {
        all[i] = i;
    }
    auto m = power_decompose(spec, ObjectExpr::sum(group.order(), all), n);
    long long total = 0;
    for (int l : members) {
        Element full = big.element(l);
        Element a(full.begin(), full.begin() + group.rank());
        for (int c = 0; c < group.order(); c++) {
            int ca = group.index_of(group.add(group.element(c), a));
            total += static_cast<long long>(m.mult[c]) * m.mult[ca];
        }
    }
    return total;
}

}  // namespace fusionchain
