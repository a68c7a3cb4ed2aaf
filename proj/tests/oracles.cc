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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>

namespace oracle {

std::set<std::vector<int>> brute_span(int n, const std::vector<std::vector<int>> &gens, std::size_t dim) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> stack{std::vector<int>(dim, 0)};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto &g : gens) {
            auto w = v;
            for (std::size_t i = 0; i < dim; i++) {
                w[i] = (w[i] + g[i]) % n;
            }
            if (seen.insert(w).second) {
                stack.push_back(w);
            }
        }
    }
    return seen;
}

int brute_automorphism_count(const FiniteAbelianGroup &g) {
    int order = g.order();
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    auto els = g.elements();
    int count = 0;
    do {
        if (perm[0] != 0) {
            continue;
        }
        bool hom = true;
        for (int a = 0; a < order && hom; a++) {
            for (int b = 0; b < order && hom; b++) {
                int ab = g.index_of(g.add(els[a], els[b]));
                hom = perm[ab] == g.index_of(g.add(els[perm[a]], els[perm[b]]));
            }
        }
        count += hom;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace oracle

namespace oracle {

namespace {

void walk(const fusionchain::FusionCategorySpec &spec, const fusionchain::ObjectExpr &x, int depth, int c,
          long long weight, std::vector<long long> &out) {
    if (depth == 0) {
        out[c] += weight;
        return;
    }
    for (int a = 0; a < spec.rank(); a++) {
        if (!x.mult[a]) {
            continue;
        }
        for (int d = 0; d < spec.rank(); d++) {
            if (spec.N[c][a][d]) {
                walk(spec, x, depth - 1, d, weight * x.mult[a] * spec.N[c][a][d], out);
            }
        }
    }
}

}  // namespace

std::vector<long long> path_count_multiplicities(const fusionchain::FusionCategorySpec &spec,
                                                 const fusionchain::ObjectExpr &x, int n) {
    std::vector<long long> out(spec.rank(), 0);
    walk(spec, x, n, 0, 1, out);
    return out;
}

}  // namespace oracle

namespace oracle {

long long dense_commutant_dimension(const std::vector<fusionchain::Matrix> &generators, double cutoff) {
    using fusionchain::Matrix;
    auto D = generators.at(0).rows();
    Matrix sys(static_cast<Eigen::Index>(generators.size()) * D * D, D * D);
    Matrix id = Matrix::Identity(D, D);
    for (std::size_t k = 0; k < generators.size(); k++) {
        const Matrix &g = generators[k];
        // column-major vec: vec(g x) = (I (x) g) vec(x), vec(x g) = (g^T (x) I) vec(x)
        for (Eigen::Index a = 0; a < D; a++) {
            for (Eigen::Index b = 0; b < D; b++) {
                sys.block(k * D * D + a * D, b * D, D, D) = id(a, b) * g - g(b, a) * id;
            }
        }
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(sys);
    qr.setThreshold(cutoff);
    long long rank = qr.rank();
    return D * D - rank;
}

long long character_commutant_dimension(const fusionchain::FiniteAbelianGroup &group, int n) {
    // tr R_g = |A| if g = 0 else 0, so tr U_g = |A|^n delta_{g,0}
    long long total = 0;
    for (auto &g : group.elements()) {
        long long t = 1;
        for (int i = 0; i < n; i++) {
            long long tr = 0;
            for (auto &h : group.elements()) {
                tr += group.add(g, h) == h;
            }
            t *= tr;
        }
        total += t * t;
    }
    return total / group.order();
}

}  // namespace oracle

namespace oracle {

int brute_lagrangian_subsets(const fusionchain::AnyonSystem &sys) {
    int r = sys.rank();
    int want = static_cast<int>(std::llround(std::sqrt(static_cast<double>(r))));
    int count = 0;
    std::vector<int> chosen{0};
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(chosen.size()) == want) {
            std::vector<char> in(r, 0);
            for (int a : chosen) {
                in[a] = 1;
            }
            for (int a : chosen) {
                if (!sys.twist[a].is_one()) {
                    return;
                }
                for (int b : chosen) {
                    for (int c = 0; c < r; c++) {
                        if (sys.N[a][b][c] && !in[c]) {
                            return;
                        }
                    }
                }
            }
            count++;
            return;
        }
        for (int a = next; a < r; a++) {
            chosen.push_back(a);
            rec(a + 1);
            chosen.pop_back();
        }
    };
    rec(1);
    return count;
}

int brute_braided_autoequivalences(const fusionchain::AnyonSystem &sys) {
    int r = sys.rank();
    std::vector<int> p(r);
    for (int i = 0; i < r; i++) {
        p[i] = i;
    }
    int count = 0;
    do {
        bool ok = true;
        for (int a = 0; a < r && ok; a++) {
            ok = sys.twist[p[a]] == sys.twist[a];
        }
        for (int a = 0; a < r && ok; a++) {
            for (int b = 0; b < r && ok; b++) {
                if (!sys.monodromy.empty()) {
                    ok = sys.monodromy[p[a]][p[b]] == sys.monodromy[a][b];
                }
                for (int c = 0; c < r && ok; c++) {
                    ok = sys.N[p[a]][p[b]][p[c]] == sys.N[a][b][c];
                }
            }
        }
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

std::vector<std::vector<int>> reverse_order_candidates(const fusionchain::AnyonSystem &sys, int max_multiplicity) {
    int r = sys.rank();
    const auto &S = sys.S;
    std::vector<std::vector<std::vector<double>>> N(r, std::vector<std::vector<double>>(r, std::vector<double>(r)));
    for (int a = 0; a < r; a++) {
        for (int b = 0; b < r; b++) {
            for (int c = 0; c < r; c++) {
                std::complex<double> s = 0;
                for (int x = 0; x < r; x++) {
                    s += S(a, x) * S(b, x) * std::conj(S(c, x)) / S(0, x);
                }
                N[a][b][c] = std::round(s.real());
            }
        }
    }
    double total = 0;
    std::vector<double> d(r);
    for (int a = 0; a < r; a++) {
        d[a] = std::abs(S(a, 0) / S(0, 0));
        total += d[a] * d[a];
    }
    double target = std::sqrt(total);
    std::vector<std::vector<int>> out;
    std::vector<int> n(r, 0);
    n[0] = 1;
    // odometer over labels r-1, ..., 1 (last label varies fastest)
    while (true) {
        double dim = 0;
        bool ok = true;
        for (int a = 0; a < r; a++) {
            dim += n[a] * d[a];
            if (n[a] && !sys.twist[a].is_one()) {
                ok = false;
            }
        }
        ok = ok && std::abs(dim - target) < 1e-8;
        for (int a = 0; a < r && ok; a++) {
            for (int b = 0; b < r && ok; b++) {
                double rhs = 0;
                for (int c = 0; c < r; c++) {
                    rhs += N[a][b][c] * n[c];
                }
                ok = n[a] * n[b] <= rhs + 1e-9;
            }
        }
        if (ok) {
            out.push_back(n);
        }
        int k = r - 1;
        while (k >= 1) {
            if (!sys.twist[k].is_one() || n[k] == max_multiplicity) {
                n[k] = 0;
                k--;
            } else {
                n[k]++;
                break;
            }
        }
        if (k < 1) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
