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

#include "fusionchain/fusion.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

using Tensor3 = std::vector<std::vector<std::vector<int>>>;

Tensor3 zero_tensor(int r) {
    return Tensor3(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
}

std::string pointed_label(const FiniteAbelianGroup &g, const Element &a, const std::string &gen) {
    bool zero = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
    if (zero) {
        return "1";
    }
    if (g.rank() == 1) {
        return a[0] == 1 ? gen : gen + "^" + std::to_string(a[0]);
    }
    return gen + g.format(a);
}

FusionCategorySpec pointed_named(const FiniteAbelianGroup &group, const std::string &gen, const std::string &name) {
    FusionCategorySpec s;
    s.name = name;
    int r = group.order();
    auto els = group.elements();
    for (auto &a : els) {
        s.labels.push_back(pointed_label(group, a, gen));
    }
    s.N = zero_tensor(r);
    s.dual.resize(r);
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            s.N[a][b][group.index_of(group.add(els[a], els[b]))] = 1;
        }
        s.dual[a] = group.index_of(group.negate(els[a]));
    }
    s.qdims.assign(r, 1.0);
    s.fkind = FKind::Trivial;
    s.pointed_group = group;
    return s;
}

}  // namespace

int FusionCategorySpec::label_index(const std::string &label) const {
    for (int i = 0; i < rank(); i++) {
        if (labels[i] == label) {
            return i;
        }
    }
    throw InvalidArgument("unknown label '" + label + "' in category " + name);
}

bool FusionCategorySpec::admissible(int a, int b, int c, int d, int e, int f) const {
    return N[a][b][e] && N[e][c][d] && N[b][c][f] && N[a][f][d];
}

std::complex<double> FusionCategorySpec::F(int a, int b, int c, int d, int e, int f) const {
    if (fkind == FKind::None) {
        throw FSymbolsMissing("category " + name + " carries no F-symbols");
    }
    if (!admissible(a, b, c, d, e, f)) {
        return 0.0;
    }
    if (fkind == FKind::Trivial) {
        return 1.0;
    }
    auto it = ftable.find({a, b, c, d, e, f});
    if (it == ftable.end()) {
        throw FSymbolsMissing("F-symbol table of " + name + " lacks an admissible entry");
    }
    return it->second.value();
}

bool FusionCategorySpec::multiplicity_free() const {
    for (auto &x : N) {
        for (auto &y : x) {
            for (int v : y) {
                if (v > 1) {
                    return false;
                }
            }
        }
    }
    return true;
}

double FusionCategorySpec::global_dimension() const {
    double s = 0;
    for (double d : qdims) {
        s += d * d;
    }
    return s;
}

ObjectExpr ObjectExpr::simple(int rank, int label) {
    ObjectExpr x;
    x.mult.assign(rank, 0);
    x.mult.at(label) = 1;
    return x;
}

ObjectExpr ObjectExpr::sum(int rank, const std::vector<int> &labels) {
    ObjectExpr x;
    x.mult.assign(rank, 0);
    for (int l : labels) {
        x.mult.at(l)++;
    }
    return x;
}

int ObjectExpr::total() const {
    return std::accumulate(mult.begin(), mult.end(), 0);
}

double ObjectExpr::dimension(const FusionCategorySpec &spec) const {
    double s = 0;
    for (int a = 0; a < spec.rank(); a++) {
        s += mult[a] * spec.qdims[a];
    }
    return s;
}

std::vector<std::vector<int>> ModuleCategorySpec::object_action(const ObjectExpr &x) const {
    int r = rank();
    std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
    for (std::size_t a = 0; a < x.mult.size(); a++) {
        if (x.mult[a] == 0) {
            continue;
        }
        for (int i = 0; i < r; i++) {
            for (int j = 0; j < r; j++) {
                m[i][j] += x.mult[a] * action[a][i][j];
            }
        }
    }
    return m;
}

bool ModuleCategorySpec::is_associative(const FusionCategorySpec &spec) const {
    int r = rank();
    if (static_cast<int>(action.size()) != spec.rank()) {
        return false;
    }
    for (int a = 0; a < spec.rank(); a++) {
        for (int b = 0; b < spec.rank(); b++) {
            for (int i = 0; i < r; i++) {
                for (int j = 0; j < r; j++) {
                    long long lhs = 0, rhs = 0;
                    for (int k = 0; k < r; k++) {
                        lhs += static_cast<long long>(action[a][i][k]) * action[b][k][j];
                    }
                    for (int c = 0; c < spec.rank(); c++) {
                        rhs += static_cast<long long>(spec.N[a][b][c]) * action[c][i][j];
                    }
                    if (lhs != rhs) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool ModuleCategorySpec::is_indecomposable() const {
    int r = rank();
    if (r == 0) {
        return false;
    }
    std::vector<char> seen(r, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (auto &m : action) {
            for (int j = 0; j < r; j++) {
                if ((m[i][j] || m[j][i]) && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

FusionCategorySpec pointed_category(const FiniteAbelianGroup &group) {
    return pointed_named(group, "g", "Vec(" + group.name() + ")");
}

FusionCategorySpec rep_category(const FiniteAbelianGroup &group) {
    return pointed_named(dual_group(group).dual, "chi", "Rep(" + group.name() + ")");
}

FusionCategorySpec tambara_yamagami(const FiniteAbelianGroup &group, const Bicharacter &chi, int sign) {
    if (sign != 1 && sign != -1) {
        throw InvalidArgument("Tambara-Yamagami sign must be +1 or -1");
    }
    if (chi.group() != group) {
        throw InvalidBicharacter("bicharacter is defined on a different group");
    }
    if (!chi.is_symmetric()) {
        throw InvalidBicharacter("bicharacter is not symmetric");
    }
    if (!chi.is_nondegenerate()) {
        throw InvalidBicharacter("bicharacter is degenerate");
    }
    FusionCategorySpec s = pointed_named(group, "g", "");
    s.name = std::string("TY(") + group.name() + (sign > 0 ? ",+)" : ",-)");
    s.pointed_group.reset();
    int na = group.order();
    int rho = na;
    int r = na + 1;
    s.labels.push_back("rho");
    auto old = s.N;
    s.N = zero_tensor(r);
    for (int a = 0; a < na; a++) {
        for (int b = 0; b < na; b++) {
            s.N[a][b] = old[a][b];
            s.N[a][b].push_back(0);
        }
        s.N[a][rho][rho] = 1;
        s.N[rho][a][rho] = 1;
        s.N[rho][rho][a] = 1;
    }
    s.dual.push_back(rho);
    s.qdims.push_back(std::sqrt(static_cast<double>(na)));
    s.grading.assign(r, 0);
    s.grading[rho] = 1;
    s.grading_order = 2;

    auto els = group.elements();
    double tau = sign / std::sqrt(static_cast<double>(na));
    s.fkind = FKind::Table;
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            for (int c = 0; c < r; c++) {
                for (int d = 0; d < r; d++) {
                    for (int e = 0; e < r; e++) {
                        for (int f = 0; f < r; f++) {
                            if (!s.admissible(a, b, c, d, e, f)) {
                                continue;
                            }
                            FValue v;
                            if (a < na && b == rho && c < na) {
                                v.phase = chi.phase(els[a], els[c]);
                            } else if (a == rho && b < na && c == rho) {
                                v.phase = chi.phase(els[b], els[d]);
                            } else if (a == rho && b == rho && c == rho) {
                                v.phase = chi.phase(els[e], els[f]).inverse();
                                v.scale = tau;
                            }
                            s.ftable[{a, b, c, d, e, f}] = v;
                        }
                    }
                }
            }
        }
    }
    s.ty = TambaraYamagamiData{group, chi, sign};
    return s;
}

FusionCategorySpec fibonacci_category() {
    FusionCategorySpec s;
    s.name = "Fib";
    s.labels = {"1", "tau"};
    s.N = zero_tensor(2);
    s.N[0][0][0] = 1;
    s.N[0][1][1] = s.N[1][0][1] = 1;
    s.N[1][1][0] = s.N[1][1][1] = 1;
    s.dual = {0, 1};
    double phi = (1 + std::sqrt(5.0)) / 2;
    s.qdims = {1.0, phi};
    s.fkind = FKind::Table;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (int c = 0; c < 2; c++) {
                for (int d = 0; d < 2; d++) {
                    for (int e = 0; e < 2; e++) {
                        for (int f = 0; f < 2; f++) {
                            if (!s.admissible(a, b, c, d, e, f)) {
                                continue;
                            }
                            FValue v;
                            if (a == 1 && b == 1 && c == 1 && d == 1) {
                                if (e == 0 && f == 0) {
                                    v.scale = 1 / phi;
                                } else if (e == 1 && f == 1) {
                                    v.scale = 1 / phi;
                                    v.phase = Phase::minus_one();
                                } else {
                                    v.scale = 1 / std::sqrt(phi);
                                }
                            }
                            s.ftable[{a, b, c, d, e, f}] = v;
                        }
                    }
                }
            }
        }
    }
    return s;
}

FusionCategorySpec ising_category() {
    auto z2 = FiniteAbelianGroup::cyclic(2);
    FusionCategorySpec s = tambara_yamagami(z2, standard_bicharacter(z2).chi, 1);
    s.name = "Ising";
    s.labels = {"1", "psi", "sigma"};
    return s;
}

ModuleCategorySpec regular_module(const FusionCategorySpec &spec) {
    ModuleCategorySpec m;
    m.name = spec.name;
    m.labels = spec.labels;
    int r = spec.rank();
    m.action.assign(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    for (int a = 0; a < r; a++) {
        for (int i = 0; i < r; i++) {
            for (int j = 0; j < r; j++) {
                m.action[a][i][j] = spec.N[a][j][i];
            }
        }
    }
    return m;
}

ModuleCategorySpec fiber_functor_module(const FusionCategorySpec &spec) {
    for (double d : spec.qdims) {
        if (std::abs(d - 1.0) > 1e-12) {
            throw UnsupportedSystem("a rank-one module needs every simple of dimension 1");
        }
    }
    ModuleCategorySpec m;
    m.name = "fiber(" + spec.name + ")";
    m.labels = {"*"};
    m.action.assign(spec.rank(), {{1}});
    return m;
}

ObjectExpr tensor_decompose(const FusionCategorySpec &spec, const ObjectExpr &x, const ObjectExpr &y) {
    int r = spec.rank();
    ObjectExpr out;
    out.mult.assign(r, 0);
    for (int a = 0; a < r; a++) {
        if (!x.mult[a]) {
            continue;
        }
        for (int b = 0; b < r; b++) {
            if (!y.mult[b]) {
                continue;
            }
            for (int c = 0; c < r; c++) {
                out.mult[c] += x.mult[a] * y.mult[b] * spec.N[a][b][c];
            }
        }
    }
    return out;
}

ObjectExpr power_decompose(const FusionCategorySpec &spec, const ObjectExpr &x, int n) {
    if (n < 0) {
        throw InvalidArgument("tensor power must be nonnegative");
    }
    ObjectExpr out = ObjectExpr::unit(spec.rank());
    for (int i = 0; i < n; i++) {
        out = tensor_decompose(spec, out, x);
    }
    return out;
}

long long end_dimension(const ObjectExpr &x) {
    long long s = 0;
    for (int m : x.mult) {
        s += static_cast<long long>(m) * m;
    }
    return s;
}

long long associativity_defect(const FusionCategorySpec &spec) {
    int r = spec.rank();
    long long worst = 0;
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            for (int c = 0; c < r; c++) {
                for (int d = 0; d < r; d++) {
                    long long lhs = 0, rhs = 0;
                    for (int e = 0; e < r; e++) {
                        lhs += static_cast<long long>(spec.N[a][b][e]) * spec.N[e][c][d];
                        rhs += static_cast<long long>(spec.N[b][c][e]) * spec.N[a][e][d];
                    }
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
            }
        }
    }
    return worst;
}

std::vector<double> quantum_dims(const FusionCategorySpec &spec) {
    if (associativity_defect(spec) != 0) {
        throw NonAssociative("fusion rules of " + spec.name + " are not associative");
    }
    int r = spec.rank();
    if (spec.pointed_group) {
        return std::vector<double>(r, 1.0);
    }
    // (M)_{bc} = delta + sum_a N_{ab}^c, positive for connected rings
    std::vector<std::vector<double>> m(r, std::vector<double>(r, 0.0));
    for (int b = 0; b < r; b++) {
        m[b][b] += 1;
        for (int a = 0; a < r; a++) {
            for (int c = 0; c < r; c++) {
                m[b][c] += spec.N[a][b][c];
            }
        }
    }
    std::vector<double> v(r, 1.0), w(r);
    for (int it = 0; it < 100000; it++) {
        double norm = 0;
        for (int b = 0; b < r; b++) {
            w[b] = 0;
            for (int c = 0; c < r; c++) {
                w[b] += m[b][c] * v[c];
            }
            norm = std::max(norm, w[b]);
        }
        double change = 0;
        for (int b = 0; b < r; b++) {
            w[b] /= norm;
            change = std::max(change, std::abs(w[b] - v[b]));
        }
        v.swap(w);
        if (change < 1e-15) {
            break;
        }
    }
    std::vector<double> d(r);
    for (int b = 0; b < r; b++) {
        d[b] = v[b] / v[0];
    }
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            double rhs = 0;
            for (int c = 0; c < r; c++) {
                rhs += spec.N[a][b][c] * d[c];
            }
            if (std::abs(d[a] * d[b] - rhs) > 1e-12 * std::max(1.0, rhs)) {
                throw NonAssociative("power iteration did not produce dimensions satisfying the fusion rules");
            }
        }
    }
    return d;
}

double pentagon_residual(const FusionCategorySpec &spec) {
    if (spec.fkind == FKind::None) {
        throw FSymbolsMissing("category " + spec.name + " carries no F-symbols");
    }
    if (!spec.multiplicity_free()) {
        throw UnsupportedSystem("pentagon check supports multiplicity-free rings only");
    }
    int r = spec.rank();
    const auto &N = spec.N;
    double worst = 0;
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            for (int c = 0; c < r; c++) {
                for (int d = 0; d < r; d++) {
                    for (int e = 0; e < r; e++) {
                        for (int f = 0; f < r; f++) {
                            if (!N[a][b][f]) {
                                continue;
                            }
                            for (int g = 0; g < r; g++) {
                                if (!N[f][c][g] || !N[g][d][e]) {
                                    continue;
                                }
                                for (int l = 0; l < r; l++) {
                                    if (!N[c][d][l]) {
                                        continue;
                                    }
                                    for (int k = 0; k < r; k++) {
                                        if (!N[b][l][k] || !N[a][k][e]) {
                                            continue;
                                        }
                                        std::complex<double> lhs =
                                            spec.F(f, c, d, e, g, l) * spec.F(a, b, l, e, f, k);
                                        std::complex<double> rhs = 0;
                                        for (int h = 0; h < r; h++) {
                                            rhs += spec.F(a, b, c, g, f, h) * spec.F(a, h, d, e, g, k) *
                                                   spec.F(b, c, d, k, h, l);
                                        }
                                        worst = std::max(worst, std::abs(lhs - rhs));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return worst;
}

void validate_category(const FusionCategorySpec &spec) {
    int r = spec.rank();
    auto fail = [&](const std::string &msg) { throw InvariantViolation(spec.name + ": " + msg); };
    if (r == 0) {
        fail("no labels");
    }
    if (static_cast<int>(spec.N.size()) != r || static_cast<int>(spec.dual.size()) != r ||
        static_cast<int>(spec.qdims.size()) != r) {
        fail("inconsistent table sizes");
    }
    for (int a = 0; a < r; a++) {
        if (static_cast<int>(spec.N[a].size()) != r) {
            fail("fusion tensor is not rank x rank x rank");
        }
        for (int b = 0; b < r; b++) {
            if (static_cast<int>(spec.N[a][b].size()) != r) {
                fail("fusion tensor is not rank x rank x rank");
            }
            for (int c = 0; c < r; c++) {
                if (spec.N[a][b][c] < 0) {
                    fail("negative fusion coefficient");
                }
            }
            if (spec.N[0][a][b] != (a == b) || spec.N[a][0][b] != (a == b)) {
                fail("label 0 is not a unit");
            }
        }
    }
    for (int a = 0; a < r; a++) {
        int da = spec.dual[a];
        if (da < 0 || da >= r || spec.dual[da] != a || spec.N[a][da][0] != 1) {
            fail("dual of " + spec.labels[a] + " is inconsistent");
        }
    }
    if (associativity_defect(spec) != 0) {
        throw NonAssociative(spec.name + ": fusion rules are not associative");
    }
    for (int a = 0; a < r; a++) {
        if (!(spec.qdims[a] > 0)) {
            fail("quantum dimensions must be positive");
        }
        for (int b = 0; b < r; b++) {
            double rhs = 0;
            for (int c = 0; c < r; c++) {
                rhs += spec.N[a][b][c] * spec.qdims[c];
            }
            if (std::abs(spec.qdims[a] * spec.qdims[b] - rhs) > 1e-12 * std::max(1.0, rhs)) {
                fail("quantum dimensions violate d_a d_b = sum N d_c");
            }
        }
    }
    if (!spec.grading.empty()) {
        if (static_cast<int>(spec.grading.size()) != r || spec.grading[0] != 0) {
            fail("grading must assign the unit to degree 0");
        }
        for (int a = 0; a < r; a++) {
            for (int b = 0; b < r; b++) {
                for (int c = 0; c < r; c++) {
                    if (spec.N[a][b][c] &&
                        (spec.grading[a] + spec.grading[b]) % spec.grading_order != spec.grading[c]) {
                        fail("fusion does not respect the grading");
                    }
                }
            }
        }
    }
    if (spec.fkind != FKind::None && spec.multiplicity_free()) {
        double res = pentagon_residual(spec);
        if (res > 1e-10) {
            fail("pentagon residual " + std::to_string(res) + " exceeds 1e-10");
        }
    }
}

StrongGeneration is_strong_generator(const ObjectExpr &x, const FusionCategorySpec &spec) {
    StrongGeneration out;
    int r = spec.rank();
    if (static_cast<int>(x.mult.size()) != r) {
        throw InvalidArgument("object has wrong length for category " + spec.name);
    }
    if (x.total() == 0) {
        out.reason = "zero object";
        return out;
    }
    std::vector<int> targets;
    for (int a = 0; a < r; a++) {
        if (spec.grading.empty() || spec.grading[a] == 0) {
            targets.push_back(a);
        }
    }
    ObjectExpr p = ObjectExpr::unit(r);
    for (int n = 1; n <= r * r; n++) {
        p = tensor_decompose(spec, p, x);
        for (auto &m : p.mult) {
            m = m > 0 ? 1 : 0;
        }
        bool all = std::all_of(targets.begin(), targets.end(), [&](int a) { return p.mult[a] > 0; });
        if (all) {
            out.generating = true;
            out.power = n;
            out.reason = spec.grading.empty() ? "X^n contains every simple"
                                              : "X^n contains every simple of degree 0";
            return out;
        }
    }
    out.reason = "no power up to rank^2 = " + std::to_string(r * r) + " covers the required simples";
    return out;
}

}  // namespace fusionchain
