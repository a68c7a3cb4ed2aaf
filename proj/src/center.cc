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

#include "fusionchain/center.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

std::string cyclic_anyon_label(int n, int a, int f) {
    if (a == 0 && f == 0) {
        return "1";
    }
    if (n == 2 && a == 1 && f == 1) {
        return "f";
    }
    std::string s;
    if (a) {
        s += "e";
        if (a != 1) {
            s += "^" + std::to_string(a);
        }
    }
    if (f) {
        s += "m";
        if (f != 1) {
            s += "^" + std::to_string(f);
        }
    }
    return s;
}

Matrix kron2(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Doubles C x C^rev of a modular category given by (labels, twists, qdims, S, N).
AnyonSystem chiral_double(const std::string &name, const std::vector<std::string> &labels,
                          const std::vector<Phase> &twist, const std::vector<double> &qdims, const Matrix &S) {
    AnyonSystem sys;
    sys.name = name;
    int r = static_cast<int>(labels.size());
    auto N = verlinde_fusion(S);
    for (int x = 0; x < r; x++) {
        for (int y = 0; y < r; y++) {
            std::string bar = y == 0 ? "1" : labels[y] + "bar";
            sys.labels.push_back("(" + labels[x] + "," + bar + ")");
            sys.twist.push_back(twist[x] * twist[y].inverse());
            sys.qdims.push_back(qdims[x] * qdims[y]);
        }
    }
    sys.S = kron2(S, S.conjugate());
    int R = r * r;
    sys.N.assign(R, std::vector<std::vector<int>>(R, std::vector<int>(R, 0)));
    for (int a = 0; a < R; a++) {
        for (int b = 0; b < R; b++) {
            for (int c = 0; c < R; c++) {
                sys.N[a][b][c] = N[a / r][b / r][c / r] * N[a % r][b % r][c % r];
            }
        }
    }
    return sys;
}

}  // namespace

int AnyonSystem::label_index(const std::string &label) const {
    for (int i = 0; i < rank(); i++) {
        if (labels[i] == label) {
            return i;
        }
    }
    throw InvalidArgument("unknown anyon label '" + label + "' in " + name);
}

double AnyonSystem::global_dimension() const {
    double s = 0;
    for (double d : qdims) {
        s += d * d;
    }
    return s;
}

AnyonSystem double_of_abelian(const FiniteAbelianGroup &A) {
    AnyonSystem sys;
    sys.name = "D(" + A.name() + ")";
    sys.base = A;
    FiniteAbelianGroup G = A.product(A);
    sys.group = G;
    auto dual = dual_group(A);
    int n = A.order(), k = A.rank();
    int R = G.order();
    auto split = [&](int idx) {
        Element x = G.element(idx);
        return std::pair<Element, Element>{Element(x.begin(), x.begin() + k), Element(x.begin() + k, x.end())};
    };
    int e = A.exponent();
    for (int x = 0; x < R; x++) {
        auto [a, f] = split(x);
        if (A.rank() == 0) {
            sys.labels.push_back("1");
        } else if (A.rank() == 1) {
            sys.labels.push_back(cyclic_anyon_label(n, a[0], f[0]));
        } else {
            sys.labels.push_back(x == 0 ? "1" : "(" + A.format(a) + "|" + A.format(f) + ")");
        }
        sys.twist.push_back(Phase(dual.pairing(f, a), e));
        sys.qdims.push_back(1.0);
    }
    sys.monodromy.assign(R, std::vector<Phase>(R));
    sys.N.assign(R, std::vector<std::vector<int>>(R, std::vector<int>(R, 0)));
    sys.S = Matrix::Zero(R, R);
    for (int x = 0; x < R; x++) {
        auto [a, f] = split(x);
        for (int y = 0; y < R; y++) {
            auto [b, g] = split(y);
            Phase m = Phase(dual.pairing(f, b), e) * Phase(dual.pairing(g, a), e);
            sys.monodromy[x][y] = m;
            sys.N[x][y][G.index_of(G.add(G.element(x), G.element(y)))] = 1;
            sys.S(x, y) = std::conj(m.value()) / static_cast<double>(n);
        }
    }
    return sys;
}

AnyonSystem fibonacci_double() {
    double phi = (1 + std::sqrt(5.0)) / 2;
    Matrix S(2, 2);
    S << 1, phi, phi, -1;
    S /= std::sqrt(2 + phi);
    return chiral_double("Fib x Fib^rev", {"1", "tau"}, {Phase::one(), Phase(2, 5)}, {1.0, phi}, S);
}

AnyonSystem ising_double() {
    double r2 = std::sqrt(2.0);
    Matrix S(3, 3);
    S << 1, 1, r2, 1, 1, -r2, r2, -r2, 0;
    S /= 2.0;
    return chiral_double("Ising x Ising^rev", {"1", "psi", "sigma"}, {Phase::one(), Phase::minus_one(), Phase(1, 16)},
                         {1.0, 1.0, r2}, S);
}

AnyonSystem modular_table(const std::string &name) {
    if (name == "fib" || name == "Fib") {
        return fibonacci_double();
    }
    if (name == "ising" || name == "Ising") {
        return ising_double();
    }
    if (name.size() > 3 && name.rfind("D(", 0) == 0 && name.back() == ')') {
        return double_of_abelian(FiniteAbelianGroup::parse(name.substr(2, name.size() - 3)));
    }
    throw UnknownTable("no modular data table named '" + name + "' (known: fib, ising, D(<group>))");
}

std::vector<std::vector<std::vector<int>>> verlinde_fusion(const Matrix &S, double tol) {
    int r = static_cast<int>(S.rows());
    std::vector<std::vector<std::vector<int>>> N(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            for (int c = 0; c < r; c++) {
                std::complex<double> s = 0;
                for (int x = 0; x < r; x++) {
                    s += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
                }
                long long v = std::llround(s.real());
                if (std::abs(s - static_cast<double>(v)) > 1e-6 || v < 0) {
                    throw InvariantViolation("Verlinde formula gives non-integral fusion coefficient");
                }
                (void)tol;
                N[a][b][c] = static_cast<int>(v);
            }
        }
    }
    return N;
}

std::vector<int> LagrangianAlgebra::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < multiplicity.size(); i++) {
        if (multiplicity[i]) {
            s.push_back(static_cast<int>(i));
        }
    }
    return s;
}

std::string describe(const AnyonSystem &sys, const LagrangianAlgebra &l) {
    std::string s;
    for (int x : l.support()) {
        if (!s.empty()) {
            s += "+";
        }
        if (l.multiplicity[x] != 1) {
            s += std::to_string(l.multiplicity[x]);
        }
        s += sys.labels[x];
    }
    return s;
}

bool is_lagrangian_subgroup(const AnyonSystem &sys, const std::vector<int> &support) {
    if (!sys.pointed()) {
        throw UnsupportedSystem("subgroup Lagrangian predicate needs a pointed system");
    }
    const auto &G = *sys.group;
    std::set<int> s(support.begin(), support.end());
    if (!s.count(0) || static_cast<long long>(s.size()) * static_cast<long long>(s.size()) != G.order()) {
        return false;
    }
    for (int x : s) {
        if (!sys.twist[x].is_one()) {
            return false;
        }
        for (int y : s) {
            if (!s.count(G.index_of(G.add(G.element(x), G.element(y))))) {
                return false;
            }
            if (!sys.monodromy[x][y].is_one()) {
                return false;
            }
        }
    }
    return true;
}

namespace {

LagrangianAlgebra from_support(const AnyonSystem &sys, const std::vector<int> &support) {
    LagrangianAlgebra l;
    l.multiplicity.assign(sys.rank(), 0);
    for (int x : support) {
        l.multiplicity[x] = 1;
    }
    l.dimension = static_cast<double>(support.size());
    l.certified = true;
    l.name = describe(sys, l);
    return l;
}

std::vector<Element> split_element(const AnyonSystem &sys, int x) {
    Element e = sys.group->element(x);
    int k = sys.base->rank();
    return {Element(e.begin(), e.begin() + k), Element(e.begin() + k, e.end())};
}

}  // namespace

std::vector<LagrangianAlgebra> lagrangian_algebras(const AnyonSystem &sys) {
    if (!sys.pointed()) {
        if (sys.S.size() == 0) {
            throw UnsupportedSystem(sys.name + " is neither a pointed double nor a hardcoded modular table");
        }
        return modular_candidates(sys);
    }
    std::vector<LagrangianAlgebra> out;
    int n = sys.base->order();
    for (auto &h : all_subgroups(*sys.group, std::max(kDefaultGroupCap, sys.group->order()))) {
        if (static_cast<int>(h.size()) == n && is_lagrangian_subgroup(sys, h)) {
            out.push_back(from_support(sys, h));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LagrangianAlgebra electric_algebra(const AnyonSystem &sys) {
    if (!sys.pointed()) {
        throw UnsupportedSystem("electric algebra needs a pointed double");
    }
    std::vector<int> s;
    for (int x = 0; x < sys.rank(); x++) {
        auto p = split_element(sys, x);
        if (p[1] == sys.base->identity()) {
            s.push_back(x);
        }
    }
    auto l = from_support(sys, s);
    return l;
}

LagrangianAlgebra magnetic_algebra(const AnyonSystem &sys) {
    if (!sys.pointed()) {
        throw UnsupportedSystem("magnetic algebra needs a pointed double");
    }
    std::vector<int> s;
    for (int x = 0; x < sys.rank(); x++) {
        auto p = split_element(sys, x);
        if (p[0] == sys.base->identity()) {
            s.push_back(x);
        }
    }
    return from_support(sys, s);
}

LagrangianAlgebra lagrangian_by_name(const AnyonSystem &sys, const std::string &name) {
    if (name == "electric") {
        return electric_algebra(sys);
    }
    if (name == "magnetic") {
        return magnetic_algebra(sys);
    }
    for (auto &l : lagrangian_algebras(sys)) {
        if (l.name == name) {
            return l;
        }
    }
    throw InvalidArgument("no Lagrangian algebra named '" + name + "' in " + sys.name);
}

bool BraidedAutoEq::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); i++) {
        if (perm[i] != static_cast<int>(i)) {
            return false;
        }
    }
    return true;
}

BraidedAutoEq BraidedAutoEq::after(const BraidedAutoEq &first) const {
    BraidedAutoEq out;
    out.perm.resize(first.perm.size());
    for (std::size_t i = 0; i < perm.size(); i++) {
        out.perm[i] = perm[first.perm[i]];
    }
    if (hom && first.hom) {
        out.hom = hom->after(*first.hom);
    }
    return out;
}

BraidedAutoEq BraidedAutoEq::inverse() const {
    BraidedAutoEq out;
    out.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); i++) {
        out.perm[perm[i]] = static_cast<int>(i);
    }
    if (hom) {
        out.hom = hom->inverse();
    }
    return out;
}

LagrangianAlgebra BraidedAutoEq::apply(const LagrangianAlgebra &l) const {
    LagrangianAlgebra out = l;
    out.multiplicity.assign(l.multiplicity.size(), 0);
    for (std::size_t i = 0; i < perm.size(); i++) {
        out.multiplicity[perm[i]] = l.multiplicity[i];
    }
    out.name.clear();
    return out;
}

BraidedAutoEq identity_autoeq(const AnyonSystem &sys) {
    BraidedAutoEq out;
    out.perm.resize(sys.rank());
    std::iota(out.perm.begin(), out.perm.end(), 0);
    if (sys.pointed()) {
        out.hom = GroupHom::identity(*sys.group);
    }
    return out;
}

bool preserves_braiding(const AnyonSystem &sys, const std::vector<int> &perm) {
    int r = sys.rank();
    if (static_cast<int>(perm.size()) != r) {
        return false;
    }
    std::vector<int> seen(r, 0);
    for (int p : perm) {
        if (p < 0 || p >= r || seen[p]++) {
            return false;
        }
    }
    for (int a = 0; a < r; a++) {
        if (sys.twist[perm[a]] != sys.twist[a]) {
            return false;
        }
        for (int b = 0; b < r; b++) {
            if (sys.pointed() && sys.monodromy[perm[a]][perm[b]] != sys.monodromy[a][b]) {
                return false;
            }
            for (int c = 0; c < r; c++) {
                if (sys.N[perm[a]][perm[b]][perm[c]] != sys.N[a][b][c]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<BraidedAutoEq> braided_autoequivalences(const AnyonSystem &sys, int cap) {
    if (!sys.pointed()) {
        throw UnsupportedSystem("braided autoequivalences are enumerated for pointed doubles only");
    }
    const auto &G = *sys.group;
    if (G.order() > cap) {
        throw CapExceeded("|A x dual(A)| = " + std::to_string(G.order()) + " exceeds cap " + std::to_string(cap));
    }
    auto filter = [&](const std::vector<Element> &images) {
        std::size_t k = images.size() - 1;
        int gk = G.index_of(G.generator(static_cast<int>(k)));
        int ik = G.index_of(images[k]);
        if (sys.twist[ik] != sys.twist[gk]) {
            return false;
        }
        for (std::size_t j = 0; j < k; j++) {
            int gj = G.index_of(G.generator(static_cast<int>(j)));
            if (sys.monodromy[ik][G.index_of(images[j])] != sys.monodromy[gk][gj]) {
                return false;
            }
        }
        return true;
    };
    std::vector<BraidedAutoEq> out;
    for (auto &h : automorphism_group(G, cap, filter)) {
        BraidedAutoEq b;
        b.perm = h.table();
        if (!preserves_braiding(sys, b.perm)) {
            continue;
        }
        b.hom = h;
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BraidedAutoEq alpha_chi(const Bicharacter &chi) {
    if (!chi.is_symmetric()) {
        throw InvalidBicharacter("alpha_chi needs a symmetric bicharacter");
    }
    GroupHom t = chi_tilde(chi);
    GroupHom inv = t.inverse();
    const auto &A = chi.group();
    AnyonSystem sys = double_of_abelian(A);
    const auto &G = *sys.group;
    int k = A.rank();
    std::vector<Element> images;
    for (int i = 0; i < G.rank(); i++) {
        Element a = A.identity(), f = A.identity();
        if (i < k) {
            a = A.generator(i);
        } else {
            f = A.generator(i - k);
        }
        Element img = inv.apply(f);
        Element ta = t.apply(a);
        img.insert(img.end(), ta.begin(), ta.end());
        images.push_back(img);
    }
    GroupHom h(G, G, images);
    BraidedAutoEq out;
    out.perm = h.table();
    out.hom = h;
    if (!preserves_braiding(sys, out.perm)) {
        throw InvariantViolation("alpha_chi failed to preserve the braiding of " + sys.name);
    }
    return out;
}

BraidedAutoEq charge_conjugation_autoeq(const AnyonSystem &sys) {
    if (!sys.pointed()) {
        throw UnsupportedSystem("charge conjugation is built for pointed doubles only");
    }
    const auto &G = *sys.group;
    std::vector<Element> images;
    for (int i = 0; i < G.rank(); i++) {
        images.push_back(G.negate(G.generator(i)));
    }
    GroupHom h(G, G, images);
    BraidedAutoEq out;
    out.perm = h.table();
    out.hom = h;
    return out;
}

int torsor_size(const AnyonSystem &sys, const LagrangianAlgebra &l) {
    if (!sys.pointed() || !l.certified) {
        throw UnsupportedSystem("torsor size is computed for pointed Lagrangian subgroups only");
    }
    auto s = l.support();
    if (!is_lagrangian_subgroup(sys, s)) {
        throw InvalidArgument("support is not a Lagrangian subgroup of " + sys.name);
    }
    // |Aut(L)| = number of characters of the support subgroup = its order
    return static_cast<int>(s.size());
}

QSystemReport qsystem_completeness_report(const AnyonSystem &sys) {
    QSystemReport r;
    r.system = sys.name;
    r.algebras = lagrangian_algebras(sys);
    r.lagrangian_count = static_cast<int>(r.algebras.size());
    r.complete = r.lagrangian_count == 1;
    r.certified = std::all_of(r.algebras.begin(), r.algebras.end(), [](auto &l) { return l.certified; });
    return r;
}

std::vector<LagrangianAlgebra> modular_candidates(const AnyonSystem &sys, double tol) {
    if (sys.S.size() == 0) {
        throw UnsupportedSystem(sys.name + " carries no modular data");
    }
    int r = sys.rank();
    auto N = verlinde_fusion(sys.S, tol);
    std::vector<double> d(r);
    for (int a = 0; a < r; a++) {
        d[a] = std::abs(sys.S(a, 0) / sys.S(0, 0));
    }
    double target = 1.0 / std::abs(sys.S(0, 0));
    std::vector<int> bound(r, 0);
    std::vector<int> order;
    for (int a = 1; a < r; a++) {
        if (sys.twist[a].is_one()) {
            bound[a] = static_cast<int>(std::floor((target - 1.0) / d[a] + tol));
            order.push_back(a);
        }
    }
    std::vector<int> n(r, 0);
    n[0] = 1;
    std::vector<LagrangianAlgebra> out;
    std::function<void(std::size_t, double)> rec = [&](std::size_t k, double dim) {
        if (dim > target + tol) {
            return;
        }
        if (k == order.size()) {
            if (std::abs(dim - target) > tol * std::max(1.0, target)) {
                return;
            }
            for (int a = 0; a < r; a++) {
                for (int b = 0; b < r; b++) {
                    if (!n[a] || !n[b]) {
                        continue;
                    }
                    long long rhs = 0;
                    for (int c = 0; c < r; c++) {
                        rhs += static_cast<long long>(N[a][b][c]) * n[c];
                    }
                    if (static_cast<long long>(n[a]) * n[b] > rhs) {
                        return;
                    }
                }
            }
            LagrangianAlgebra l;
            l.multiplicity = n;
            l.certified = false;
            l.dimension = dim;
            l.name = describe(sys, l);
            out.push_back(std::move(l));
            return;
        }
        int a = order[k];
        for (int m = 0; m <= bound[a]; m++) {
            n[a] = m;
            rec(k + 1, dim + m * d[a]);
        }
        n[a] = 0;
    };
    rec(0, 1.0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fusionchain
