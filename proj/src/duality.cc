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

#include "fusionchain/duality.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "fusionchain/errors.h"
#include "fusionchain/zn_linalg.h"

namespace fusionchain {

namespace {

int mod(long long a, int m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

int distance_outside(const PauliString &p, int lo, int hi) {
    if (p.is_scalar()) {
        return 0;
    }
    return std::max({0, lo - p.min_site(), p.max_site() - hi});
}

ZnMatrix columns_on(int n, int first, int last, const std::vector<PauliString> &ps) {
    std::vector<std::vector<int>> cols;
    for (auto &p : ps) {
        cols.push_back(p.symplectic(first, last));
    }
    return ZnMatrix::from_columns(n, 2 * (last - first + 1), cols);
}

struct Source {
    std::string label;
    PauliString op;
};

std::vector<Source> window_sources(int n, int window) {
    std::vector<Source> out;
    for (int i = 0; i < window; i++) {
        out.push_back({"X_" + std::to_string(i), DualitySpec::source(n, Generator::X, i)});
    }
    for (int i = 0; i + 1 < window; i++) {
        out.push_back({"B_" + std::to_string(i), DualitySpec::source(n, Generator::B, i)});
    }
    return out;
}

}  // namespace

std::string generator_name(Generator g) {
    return g == Generator::X ? "X_i" : "Z_i Z_i+1^dag";
}

PauliString DualitySpec::source(int n, Generator g, int i) {
    if (g == Generator::X) {
        return PauliString::x(n, i);
    }
    return PauliString(n, 0, {{i, {0, 1}}, {i + 1, {0, n - 1}}});
}

PauliString DualitySpec::image(Generator g, int i) const {
    return (g == Generator::X ? image_x : image_b).shifted(i);
}

SymmetricWord symmetric_word(const PauliString &p) {
    if (!p.is_symmetric()) {
        throw InvalidArgument("Pauli string " + p.str() + " is not symmetric");
    }
    SymmetricWord w;
    int n = p.n();
    PauliString q(n);
    if (!p.is_scalar()) {
        for (auto &[s, e] : p.sites()) {
            if (e.first) {
                w.x_powers.push_back({s, e.first});
                q = q * PauliString::x(n, s, e.first);
            }
        }
        long long acc = 0;
        for (int s = p.min_site(); s < p.max_site(); s++) {
            acc += p.at(s).second;
            int b = mod(acc, n);
            if (b) {
                w.b_powers.push_back({s, b});
                q = q * DualitySpec::source(n, Generator::B, s).pow(b);
            }
        }
    }
    w.phase = mod(static_cast<long long>(p.phase()) - q.phase(), PauliString::phase_modulus(n));
    if (q.with_phase(p.phase()) != p) {
        throw InvariantViolation("symmetric word does not reproduce " + p.str());
    }
    return w;
}

PauliString DualitySpec::apply(const PauliString &p) const {
    if (p.n() != n) {
        throw InvalidArgument("Pauli string over the wrong Z_n");
    }
    SymmetricWord w = symmetric_word(p);
    PauliString out(n, w.phase, {});
    for (auto &[s, k] : w.x_powers) {
        out = out * image_x.shifted(s).pow(k);
    }
    for (auto &[s, k] : w.b_powers) {
        out = out * image_b.shifted(s).pow(k);
    }
    return out;
}

int DualitySpec::measured_spread() const {
    return std::max(distance_outside(image_x, 0, 0), distance_outside(image_b, 0, 1));
}

DualitySpec kramers_wannier_spec(int n) {
    if (n < 2) {
        throw InvalidArgument("Kramers-Wannier needs n >= 2");
    }
    DualitySpec s;
    s.name = "KW(" + std::to_string(n) + ")";
    s.n = n;
    s.image_x = PauliString(n, 0, {{-1, {0, 1}}, {0, {0, n - 1}}});
    s.image_b = PauliString::x(n, 0);
    s.center_action = alpha_chi(standard_bicharacter(FiniteAbelianGroup::cyclic(n)).chi);
    s.spread = 1;
    return s;
}

DualitySpec identity_spec(int n) {
    DualitySpec s;
    s.name = "identity(" + std::to_string(n) + ")";
    s.n = n;
    s.image_x = DualitySpec::source(n, Generator::X, 0);
    s.image_b = DualitySpec::source(n, Generator::B, 0);
    s.center_action = identity_autoeq(double_of_abelian(FiniteAbelianGroup::cyclic(n)));
    s.spread = 0;
    return s;
}

DualitySpec shift_spec(int n, int k) {
    DualitySpec s;
    s.name = k == 1 ? "shift(" + std::to_string(n) + ")" : "shift(" + std::to_string(n) + "," + std::to_string(k) + ")";
    s.n = n;
    s.image_x = DualitySpec::source(n, Generator::X, -k);
    s.image_b = DualitySpec::source(n, Generator::B, -k);
    s.center_action = identity_autoeq(double_of_abelian(FiniteAbelianGroup::cyclic(n)));
    s.spread = std::abs(k);
    return s;
}

DualitySpec charge_conjugation_spec(int n) {
    DualitySpec s;
    s.name = "charge-conjugation(" + std::to_string(n) + ")";
    s.n = n;
    s.image_x = DualitySpec::source(n, Generator::X, 0).adjoint();
    s.image_b = DualitySpec::source(n, Generator::B, 0).adjoint();
    s.center_action = charge_conjugation_autoeq(double_of_abelian(FiniteAbelianGroup::cyclic(n)));
    s.spread = 0;
    return s;
}

DualitySpec compose(const DualitySpec &a, const DualitySpec &b) {
    if (a.n != b.n) {
        throw InvalidArgument("cannot compose dualities over different groups");
    }
    DualitySpec s;
    s.name = a.name + "*" + b.name;
    s.n = a.n;
    s.image_x = a.apply(b.image_x);
    s.image_b = a.apply(b.image_b);
    if (a.center_action && b.center_action) {
        s.center_action = a.center_action->after(*b.center_action);
    }
    s.spread = s.measured_spread();
    return s;
}

DualitySpec inverse(const DualitySpec &spec, int search_radius) {
    int n = spec.n, W = search_radius, R = spec.measured_spread();
    std::vector<PauliString> src, img;
    for (int i = -W; i <= W; i++) {
        src.push_back(DualitySpec::source(n, Generator::X, i));
        img.push_back(spec.image(Generator::X, i));
        if (i < W) {
            src.push_back(DualitySpec::source(n, Generator::B, i));
            img.push_back(spec.image(Generator::B, i));
        }
    }
    int lo = -W - R - 1, hi = W + R + 1;
    ZnMatrix m = columns_on(n, lo, hi, img);
    auto preimage = [&](const PauliString &target) {
        auto y = zn_solve(m, target.symplectic(lo, hi));
        if (!y) {
            throw InvariantViolation(spec.name + " has no inverse image of " + target.str() + " within radius " +
                                     std::to_string(W));
        }
        PauliString q(n);
        for (std::size_t k = 0; k < src.size(); k++) {
            if ((*y)[k]) {
                q = q * src[k].pow((*y)[k]);
            }
        }
        PauliString got = spec.apply(q);
        return q.with_phase(mod(static_cast<long long>(q.phase()) + target.phase() - got.phase(),
                                PauliString::phase_modulus(n)));
    };
    DualitySpec s;
    s.name = "inverse(" + spec.name + ")";
    s.n = n;
    s.image_x = preimage(DualitySpec::source(n, Generator::X, 0));
    s.image_b = preimage(DualitySpec::source(n, Generator::B, 0));
    if (spec.center_action) {
        s.center_action = spec.center_action->inverse();
    }
    s.spread = s.measured_spread();
    return s;
}

bool DualityReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto &c) { return c.passed; });
}

DualityReport verify_duality(const DualitySpec &spec, int window, bool throw_on_failure) {
    int n = spec.n;
    if (window < 2) {
        throw InvalidArgument("verification window needs at least 2 sites");
    }
    if (window > 64) {
        throw CapExceeded("verification window " + std::to_string(window) + " exceeds cap 64");
    }
    DualityReport rep;
    rep.spec = spec.name;
    rep.window = window;
    rep.declared_spread = spec.spread;
    rep.measured_spread = spec.measured_spread();
    auto sources = window_sources(n, window);
    std::vector<PauliString> images;
    for (auto &s : sources) {
        images.push_back(spec.apply(s.op));
    }

    Check sym{"symmetric images", true, ""};
    for (auto [g, p] : {std::pair{Generator::X, spec.image_x}, std::pair{Generator::B, spec.image_b}}) {
        if (!p.is_symmetric()) {
            sym.passed = false;
            sym.detail = "image of " + generator_name(g) + " has charge " + std::to_string(p.charge());
        }
    }
    rep.checks.push_back(sym);

    Check rel{"relations", true, ""};
    for (std::size_t a = 0; a < sources.size() && rel.passed; a++) {
        if (!images[a].pow(n).is_identity()) {
            rel.passed = false;
            rel.detail = "image of " + sources[a].label + " does not have order dividing " + std::to_string(n);
        }
        for (std::size_t b = 0; b < sources.size() && rel.passed; b++) {
            if (images[a].commutator(images[b]) != sources[a].op.commutator(sources[b].op)) {
                rel.passed = false;
                rel.detail = "commutation of " + sources[a].label + " and " + sources[b].label + " not preserved";
            }
        }
    }
    rep.checks.push_back(rel);

    Check gen{"generation", true, ""};
    int R = rep.measured_spread;
    int lo = -R, hi = window - 1 + R;
    ZnMatrix m = columns_on(n, lo, hi, images);
    ExactOrder got = span_order(m), want = ExactOrder::power(n, 2 * window - 1);
    if (got != want) {
        gen.passed = false;
        gen.detail = "image span has order " + got.str() + ", source window algebra has " + want.str();
    }
    int checked = 0;
    for (int i = R; i + R < window && gen.passed; i++) {
        std::vector<PauliString> targets{DualitySpec::source(n, Generator::X, i)};
        if (i + 1 + R < window) {
            targets.push_back(DualitySpec::source(n, Generator::B, i));
        }
        for (auto &t : targets) {
            checked++;
            if (!in_span(m, t.symplectic(lo, hi))) {
                gen.passed = false;
                gen.detail = "target generator " + t.str() + " is not generated by images";
            }
        }
    }
    if (gen.passed) {
        gen.detail = "span order " + got.str() + "; " + std::to_string(checked) + " interior target generators reached";
    }
    rep.checks.push_back(gen);

    Check spr{"spread", rep.measured_spread <= spec.spread,
              "measured " + std::to_string(rep.measured_spread) + ", declared " + std::to_string(spec.spread)};
    rep.checks.push_back(spr);

    Check star{"*-compatibility", true, ""};
    for (std::size_t a = 0; a < sources.size() && star.passed; a++) {
        if (spec.apply(sources[a].op.adjoint()) != images[a].adjoint()) {
            star.passed = false;
            star.detail = "adjoint of " + sources[a].label;
        }
        for (std::size_t b = 0; b < sources.size() && star.passed; b++) {
            PauliString prod = sources[a].op * sources[b].op;
            if (spec.apply(prod) != images[a] * images[b] || spec.apply(prod.adjoint()) != (images[a] * images[b]).adjoint()) {
                star.passed = false;
                star.detail = "product " + sources[a].label + " " + sources[b].label;
            }
        }
    }
    rep.checks.push_back(star);

    if (throw_on_failure) {
        for (auto &c : rep.checks) {
            if (!c.passed) {
                throw RelationViolated(spec.name + ": " + c.name + " check failed: " + c.detail);
            }
        }
    }
    return rep;
}

bool dense_relation_check(const DualitySpec &spec, int window, double tol) {
    int n = spec.n, R = spec.measured_spread();
    int lo = -R, hi = window - 1 + R;
    if (ipow(n, hi - lo + 1) > 4096) {
        throw CapExceeded("dense cross-check window too large");
    }
    auto sources = window_sources(n, window);
    std::vector<Matrix> imgs;
    for (auto &s : sources) {
        imgs.push_back(spec.apply(s.op).dense(lo, hi));
    }
    Eigen::Index D = imgs[0].rows();
    Matrix id = Matrix::Identity(D, D);
    for (std::size_t a = 0; a < sources.size(); a++) {
        Matrix p = id;
        for (int k = 0; k < n; k++) {
            p = p * imgs[a];
        }
        if ((p - id).norm() > tol || (imgs[a] * imgs[a].adjoint() - id).norm() > tol) {
            return false;
        }
        for (std::size_t b = 0; b < sources.size(); b++) {
            auto w = Phase(sources[a].op.commutator(sources[b].op), n).value();
            if ((imgs[a] * imgs[b] - w * imgs[b] * imgs[a]).norm() > tol) {
                return false;
            }
        }
    }
    return true;
}

std::vector<HamiltonianTerm> clock_hamiltonian(int n, double J, double h, int window) {
    std::vector<HamiltonianTerm> out;
    auto add = [&](double c, const PauliString &p) {
        if (c == 0) {
            return;
        }
        out.push_back({-c, p});
        if (n > 2) {
            out.push_back({-c, p.adjoint()});
        }
    };
    for (int i = 0; i + 1 < window; i++) {
        add(J, DualitySpec::source(n, Generator::B, i));
    }
    for (int i = 0; i < window; i++) {
        add(h, DualitySpec::source(n, Generator::X, i));
    }
    return out;
}

namespace {

std::map<PauliString, std::set<double>> canonical_terms(const std::vector<HamiltonianTerm> &terms) {
    std::map<PauliString, std::set<double>> out;
    for (auto &t : terms) {
        PauliString c = t.op.is_scalar() ? t.op : t.op.shifted(-t.op.min_site());
        out[c].insert(t.coefficient);
    }
    return out;
}

}  // namespace

std::optional<std::pair<double, double>> mapped_couplings(const DualitySpec &spec, double J, double h, int window) {
    std::vector<HamiltonianTerm> mapped;
    for (auto &t : clock_hamiltonian(spec.n, J, h, window)) {
        mapped.push_back({t.coefficient, spec.apply(t.op)});
    }
    auto img = canonical_terms(mapped);
    PauliString b = DualitySpec::source(spec.n, Generator::B, 0), x = DualitySpec::source(spec.n, Generator::X, 0);
    auto coupling = [&](const PauliString &p) -> std::optional<double> {
        auto it = img.find(p);
        if (it == img.end()) {
            return 0.0;
        }
        if (it->second.size() != 1) {
            return std::nullopt;
        }
        return -*it->second.begin();
    };
    auto Jp = coupling(b), hp = coupling(x);
    if (!Jp || !hp) {
        return std::nullopt;
    }
    auto expect = canonical_terms(clock_hamiltonian(spec.n, *Jp, *hp, window));
    if (expect != img) {
        return std::nullopt;
    }
    return std::pair<double, double>{*Jp, *hp};
}

bool intertwine_check(const DualitySpec &spec, double J, double h, double J_expected, double h_expected, int window) {
    auto m = mapped_couplings(spec, J, h, window);
    return m && m->first == J_expected && m->second == h_expected;
}

PauliString ExtensionTable::apply(const PauliString &p) const {
    if (p.n() != n) {
        throw InvalidArgument("Pauli string over the wrong Z_n");
    }
    PauliString out(n, p.phase(), {});
    for (auto &[s, e] : p.sites()) {
        out = out * image_x.shifted(s).pow(e.first) * image_z.shifted(s).pow(e.second);
    }
    return out;
}

int ExtensionTable::spread() const {
    return std::max(distance_outside(image_x, 0, 0), distance_outside(image_z, 0, 0));
}

ExtensionTable identity_extension(int n) {
    return {"identity", n, PauliString::x(n, 0), PauliString::z(n, 0)};
}

ExtensionTable symmetry_conjugation(int n, int g) {
    g = mod(g, n);
    return {"conjugation by U_" + std::to_string(g), n, PauliString::x(n, 0), PauliString::z(n, 0).times_omega(-g)};
}

ExtensionTable shift_extension(int n, int k) {
    return {"shift", n, PauliString::x(n, -k), PauliString::z(n, -k)};
}

ExtensionTable charge_conjugation_extension(int n) {
    return {"charge conjugation", n, PauliString::x(n, 0).adjoint(), PauliString::z(n, 0).adjoint()};
}

ExtensionTable compose_with_symmetry(const ExtensionTable &ext, int g) {
    ExtensionTable out = ext;
    out.name = ext.name + " after U_" + std::to_string(mod(g, ext.n));
    out.image_z = ext.image_z.times_omega(-g);
    return out;
}

DualityReport verify_extension(const ExtensionTable &ext, int window) {
    int n = ext.n;
    DualityReport rep;
    rep.spec = ext.name;
    rep.window = window;
    rep.measured_spread = ext.spread();
    rep.declared_spread = rep.measured_spread;
    std::vector<PauliString> src, img;
    std::vector<std::string> labels;
    for (int i = 0; i < window; i++) {
        src.push_back(PauliString::x(n, i));
        src.push_back(PauliString::z(n, i));
        labels.push_back("X_" + std::to_string(i));
        labels.push_back("Z_" + std::to_string(i));
    }
    for (auto &s : src) {
        img.push_back(ext.apply(s));
    }
    Check rel{"relations", true, ""};
    for (std::size_t a = 0; a < src.size() && rel.passed; a++) {
        if (!img[a].pow(n).is_identity()) {
            rel.passed = false;
            rel.detail = "order of image of " + labels[a];
        }
        for (std::size_t b = 0; b < src.size() && rel.passed; b++) {
            if (img[a].commutator(img[b]) != src[a].commutator(src[b])) {
                rel.passed = false;
                rel.detail = "commutation of " + labels[a] + " and " + labels[b];
            }
        }
    }
    rep.checks.push_back(rel);
    Check gen{"generation", true, ""};
    int R = rep.measured_spread;
    ZnMatrix m = columns_on(n, -R, window - 1 + R, img);
    for (int c = R; c + R < window && gen.passed; c++) {
        for (auto &t : {PauliString::x(n, c), PauliString::z(n, c)}) {
            if (!in_span(m, t.symplectic(-R, window - 1 + R))) {
                gen.passed = false;
                gen.detail = t.str() + " is not generated by images";
            }
        }
    }
    rep.checks.push_back(gen);
    return rep;
}

bool is_extension_of(const ExtensionTable &ext, const DualitySpec &spec, int window) {
    if (ext.n != spec.n) {
        return false;
    }
    if (ext.apply(DualitySpec::source(spec.n, Generator::X, 0)) != spec.image_x ||
        ext.apply(DualitySpec::source(spec.n, Generator::B, 0)) != spec.image_b) {
        return false;
    }
    return verify_extension(ext, window).passed();
}

ExtensionVerdict check_extension(const DualitySpec &spec, const LagrangianAlgebra &source,
                                 const LagrangianAlgebra &target, int window) {
    if (!spec.center_action) {
        throw MissingCenterAction(spec.name + " declares no center action");
    }
    AnyonSystem sys = double_of_abelian(FiniteAbelianGroup::cyclic(spec.n));
    if (static_cast<int>(source.multiplicity.size()) != sys.rank() ||
        static_cast<int>(target.multiplicity.size()) != sys.rank()) {
        throw InvalidArgument("Lagrangian algebras do not live in " + sys.name);
    }
    ExtensionVerdict v;
    v.source = source;
    v.target = target;
    v.image = spec.center_action->apply(source);
    v.image.name = describe(sys, v.image);
    v.source.name = describe(sys, source);
    v.target.name = describe(sys, target);
    v.extends = v.image.support() == target.support();
    if (!v.extends) {
        return v;
    }
    v.torsor_size = torsor_size(sys, target);
    auto electric = electric_algebra(sys);
    if (source == electric && target == electric) {
        for (auto &e : clifford_extension_search_all(spec, spec.spread, window)) {
            if (is_extension_of(e, spec, window)) {
                v.representatives.push_back(e);
            }
        }
    }
    return v;
}

std::vector<ExtensionTable> clifford_extension_search_all(const DualitySpec &spec, int R, int window, long long cap) {
    int n = spec.n, M = PauliString::phase_modulus(n);
    if (R < 0) {
        throw InvalidArgument("search radius must be non-negative");
    }
    int len = 2 * (2 * R + 1);
    long long space = ipow(n, len);
    if (space > cap / M) {
        throw CapExceeded("Clifford ansatz has " + std::to_string(space) + " x " + std::to_string(M) +
                          " candidates, cap " + std::to_string(cap));
    }
    std::vector<PauliString> xs;
    for (int j = 0; j < window; j++) {
        xs.push_back(spec.image(Generator::X, j));
    }
    PauliString b0 = spec.image_b;
    std::vector<ExtensionTable> out;
    std::vector<int> v(len, 0);
    for (long long idx = 0; idx < space; idx++) {
        long long t = idx;
        for (int k = len - 1; k >= 0; k--) {
            v[k] = static_cast<int>(t % n);
            t /= n;
        }
        PauliString w0 = PauliString::from_symplectic(n, -R, v);
        if (w0.is_scalar()) {
            continue;
        }
        PauliString bond = w0 * w0.shifted(1).adjoint();
        if (bond.sites() != b0.sites()) {
            continue;
        }
        bool ok = true;
        for (int i = 0; i < window && ok; i++) {
            PauliString wi = w0.shifted(i);
            for (int j = 0; j < window && ok; j++) {
                ok = wi.commutator(xs[j]) == (i == j ? 1 : 0) && wi.commutes(w0.shifted(j));
            }
        }
        if (!ok) {
            continue;
        }
        for (int p = 0; p < M; p++) {
            PauliString w = w0.with_phase(p);
            if (!w.pow(n).is_identity() || w * w.shifted(1).adjoint() != b0) {
                continue;
            }
            ExtensionTable e{spec.name + " extension", n, spec.image_x, w};
            if (verify_extension(e, window).passed()) {
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end());
    for (std::size_t k = 0; k < out.size(); k++) {
        out[k].name = spec.name + " extension " + std::to_string(k);
    }
    return out;
}

std::optional<ExtensionTable> clifford_extension_search(const DualitySpec &spec, int R, int window, long long cap) {
    auto all = clifford_extension_search_all(spec, R, window, cap);
    if (all.empty()) {
        return std::nullopt;
    }
    return all.front();
}

int torsor_difference(const ExtensionTable &ext1, const ExtensionTable &ext2, int window) {
    if (ext1.n != ext2.n) {
        throw NotExtensionsOfSameDuality("extensions over different groups");
    }
    int n = ext1.n;
    PauliString x0 = PauliString::x(n, 0), b0 = DualitySpec::source(n, Generator::B, 0);
    if (ext1.apply(x0) != ext2.apply(x0) || ext1.apply(b0) != ext2.apply(b0)) {
        throw NotExtensionsOfSameDuality(ext1.name + " and " + ext2.name + " restrict to different dualities");
    }
    for (auto *e : {&ext1, &ext2}) {
        if (!verify_extension(*e, window).passed()) {
            throw NotExtensionsOfSameDuality(e->name + " is not an automorphism of the chain");
        }
    }
    PauliString ratio = ext2.image_z * ext1.image_z.adjoint();
    int step = PauliString::phase_modulus(n) / n;
    if (!ratio.is_scalar() || ratio.phase() % step != 0) {
        throw InvariantViolation("extensions differ by more than a symmetry element");
    }
    int g = mod(-(ratio.phase() / step), n);
    if (compose_with_symmetry(ext1, g) != ext2) {
        throw InvariantViolation("torsor element does not reproduce the second extension");
    }
    return g;
}

SymmetryCheck symmetric_extension_check(const ExtensionTable &ext, int window) {
    int n = ext.n;
    SymmetryCheck out;
    out.direct = true;
    for (int g = 0; g < n && out.direct; g++) {
        for (int i = 0; i < window && out.direct; i++) {
            for (auto &p : {PauliString::x(n, i), PauliString::z(n, i)}) {
                if (ext.apply(conjugate_by_symmetry(p, g)) != conjugate_by_symmetry(ext.apply(p), g)) {
                    out.direct = false;
                }
            }
        }
    }
    // ext Ad(U_g) ext^{-1} = Ad(U_h) needs h * charge(ext(Z)) = g and h * charge(ext(X)) = 0
    int s = ext.image_z.charge(), c = ext.image_x.charge();
    for (int k = 0; k < n; k++) {
        if (mod(static_cast<long long>(k) * s, n) == 1 % n && c == 0) {
            out.induced_multiplier = k;
            break;
        }
    }
    out.gamma = out.induced_multiplier.has_value() && *out.induced_multiplier == 1 % n;
    return out;
}

ShiftDescriptor generalized_shift_spec(const FusionCategorySpec &cat, int y) {
    if (y < 0 || y >= cat.rank()) {
        throw InvalidArgument("object index out of range for " + cat.name);
    }
    ShiftDescriptor d;
    d.category = cat.name;
    d.object = cat.labels[y];
    std::optional<FiniteAbelianGroup> A;
    if (cat.ty) {
        A = cat.ty->group;
    } else if (cat.pointed_group) {
        A = cat.pointed_group;
    }
    if (!A) {
        throw UnsupportedExtension(cat.name + " is neither pointed nor Tambara-Yamagami");
    }
    AnyonSystem sys = double_of_abelian(*A);
    d.center_system = sys.name;
    int n = cat.grading_order;
    bool nontrivial = !cat.grading.empty() && cat.grading[y] != 0;
    auto power = ObjectExpr::simple(cat.rank(), y);
    for (int k = 1; k < std::max(1, n); k++) {
        power = tensor_decompose(cat, power, ObjectExpr::simple(cat.rank(), y));
    }
    if (nontrivial) {
        if (!cat.ty) {
            throw UnsupportedExtension("graded object " + d.object + " outside the Tambara-Yamagami family");
        }
        if (!is_strong_generator(power, cat).generating) {
            throw UnsupportedExtension(d.object + "^" + std::to_string(n) + " is not strongly generating");
        }
        d.name = "tau_alpha_chi(" + cat.name + ")";
        d.center_action = alpha_chi(cat.ty->chi);
        d.categorical_index = cat.qdims[y];
        bool standard = A->is_cyclic_form() && cat.ty->chi.matrix() == standard_bicharacter(*A).chi.matrix();
        if (standard) {
            d.table = kramers_wannier_spec(A->order());
            d.reduction = "TY(Z" + std::to_string(A->order()) +
                          ") with the standard bicharacter acts as the clock-model Kramers-Wannier table";
        } else {
            d.reduction = "no Pauli table for this fragment; descriptor only";
        }
        return d;
    }
    d.name = "shift(" + cat.name + ")";
    d.center_action = identity_autoeq(sys);
    if (A->is_cyclic_form()) {
        d.table = shift_spec(A->order());
        d.reduction = "trivially graded object: ordinary translation of the symmetric Z" +
                      std::to_string(A->order()) + " chain";
    } else {
        d.reduction = "trivially graded object: ordinary translation; no Pauli table for non-cyclic groups";
    }
    return d;
}

}  // namespace fusionchain
