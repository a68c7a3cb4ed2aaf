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

#include "fusionchain/groupdata.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_factors) : factors_(std::move(cyclic_factors)) {
    long long order = 1;
    long long exponent = 1;
    for (int n : factors_) {
        if (n <= 0) {
            throw InvalidArgument("cyclic factors must be positive integers");
        }
        order *= n;
        exponent = std::lcm(exponent, static_cast<long long>(n));
        if (order > (1LL << 30)) {
            throw CapExceeded("group order too large");
        }
    }
    order_ = static_cast<int>(order);
    exponent_ = static_cast<int>(exponent);
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string &text) {
    if (text == "1" || text == "trivial" || text == "Z1") {
        return FiniteAbelianGroup({1});
    }
    std::vector<int> factors;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, 'x')) {
        if (part.size() < 2 || (part[0] != 'Z' && part[0] != 'z')) {
            throw InvalidArgument("cannot parse group '" + text + "' (expected e.g. Z2 or Z2xZ2)");
        }
        std::string digits = part.substr(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 6) {
            throw InvalidArgument("cannot parse group '" + text + "' (expected e.g. Z2 or Z2xZ2)");
        }
        factors.push_back(std::stoi(digits));
    }
    if (factors.empty()) {
        throw InvalidArgument("cannot parse group '" + text + "'");
    }
    return FiniteAbelianGroup(std::move(factors));
}

Element FiniteAbelianGroup::generator(int i) const {
    Element e = identity();
    e[i] = factors_[i] == 1 ? 0 : 1;
    return e;
}

Element FiniteAbelianGroup::add(const Element &a, const Element &b) const {
    Element r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); i++) {
        r[i] = mod(static_cast<long long>(a[i]) + b[i], factors_[i]);
    }
    return r;
}

Element FiniteAbelianGroup::negate(const Element &a) const {
    Element r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); i++) {
        r[i] = mod(-static_cast<long long>(a[i]), factors_[i]);
    }
    return r;
}

Element FiniteAbelianGroup::scale(const Element &a, int k) const {
    Element r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); i++) {
        r[i] = mod(static_cast<long long>(a[i]) * k, factors_[i]);
    }
    return r;
}

Element FiniteAbelianGroup::reduce(Element a) const {
    if (a.size() != factors_.size()) {
        throw InvalidArgument("element has wrong rank for group " + name());
    }
    for (std::size_t i = 0; i < factors_.size(); i++) {
        a[i] = mod(a[i], factors_[i]);
    }
    return a;
}

bool FiniteAbelianGroup::is_valid(const Element &a) const {
    if (a.size() != factors_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < factors_.size(); i++) {
        if (a[i] < 0 || a[i] >= factors_[i]) {
            return false;
        }
    }
    return true;
}

int FiniteAbelianGroup::element_order(const Element &a) const {
    long long l = 1;
    for (std::size_t i = 0; i < factors_.size(); i++) {
        int n = factors_[i];
        l = std::lcm(l, static_cast<long long>(n / std::gcd(n, a[i])));
    }
    return static_cast<int>(l);
}

int FiniteAbelianGroup::index_of(const Element &a) const {
    int idx = 0;
    for (std::size_t i = 0; i < factors_.size(); i++) {
        idx = idx * factors_[i] + a[i];
    }
    return idx;
}

Element FiniteAbelianGroup::element(int index) const {
    Element r(factors_.size());
    for (std::size_t k = factors_.size(); k-- > 0;) {
        r[k] = index % factors_[k];
        index /= factors_[k];
    }
    return r;
}

std::vector<Element> FiniteAbelianGroup::elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (int i = 0; i < order_; i++) {
        out.push_back(element(i));
    }
    return out;
}

FiniteAbelianGroup FiniteAbelianGroup::product(const FiniteAbelianGroup &other) const {
    std::vector<int> f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return FiniteAbelianGroup(std::move(f));
}

std::string FiniteAbelianGroup::name() const {
    if (factors_.empty()) {
        return "1";
    }
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); i++) {
        if (i) {
            s += "x";
        }
        s += "Z" + std::to_string(factors_[i]);
    }
    return s;
}

std::string FiniteAbelianGroup::format(const Element &a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(a[i]);
    }
    return s + ")";
}

int character_value(const FiniteAbelianGroup &group, const Character &phi, const Element &a) {
    int e = group.exponent();
    long long s = 0;
    for (int i = 0; i < group.rank(); i++) {
        s += static_cast<long long>(phi.exponents[i]) * a[i] % e * (e / group.factors()[i]);
        s %= e;
    }
    return mod(s, e);
}

int DualGroup::pairing(const Element &phi, const Element &a) const {
    return character_value(group, Character{phi}, a);
}

Phase DualGroup::pairing_phase(const Element &phi, const Element &a) const {
    return Phase(pairing(phi, a), group.exponent());
}

DualGroup dual_group(const FiniteAbelianGroup &group) {
    return DualGroup{group, group};
}

Bicharacter::Bicharacter(FiniteAbelianGroup group, IntMatrix matrix) : group_(std::move(group)), matrix_(std::move(matrix)) {
    int k = group_.rank();
    if (static_cast<int>(matrix_.size()) != k) {
        throw InvalidArgument("bicharacter matrix must be " + std::to_string(k) + "x" + std::to_string(k));
    }
    for (auto &row : matrix_) {
        if (static_cast<int>(row.size()) != k) {
            throw InvalidArgument("bicharacter matrix must be square");
        }
    }
}

int Bicharacter::operator()(const Element &a, const Element &b) const {
    const auto &n = group_.factors();
    int e = group_.exponent();
    long long s = 0;
    for (int i = 0; i < group_.rank(); i++) {
        for (int j = 0; j < group_.rank(); j++) {
            long long g = std::gcd(n[i], n[j]);
            long long term = static_cast<long long>(a[i]) * matrix_[i][j] % g * b[j] % g;
            s = (s + term * (e / g)) % e;
        }
    }
    return mod(s, e);
}

Phase Bicharacter::phase(const Element &a, const Element &b) const {
    return Phase((*this)(a, b), group_.exponent());
}

bool Bicharacter::is_symmetric() const {
    auto els = group_.elements();
    for (auto &a : els) {
        for (auto &b : els) {
            if ((*this)(a, b) != (*this)(b, a)) {
                return false;
            }
        }
    }
    return true;
}

int Bicharacter::left_kernel_order() const {
    auto els = group_.elements();
    int count = 0;
    for (auto &a : els) {
        bool trivial = true;
        for (int j = 0; j < group_.rank() && trivial; j++) {
            trivial = (*this)(a, group_.generator(j)) == 0;
        }
        count += trivial;
    }
    return count;
}

BicharacterReport standard_bicharacter(const FiniteAbelianGroup &group) {
    int k = group.rank();
    IntMatrix b(k, std::vector<int>(k, 0));
    for (int i = 0; i < k; i++) {
        b[i][i] = 1;
    }
    Bicharacter chi(group, std::move(b));
    bool sym = chi.is_symmetric();
    bool nd = chi.is_nondegenerate();
    return BicharacterReport{std::move(chi), sym, nd};
}

GroupHom::GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<Element> generator_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(generator_images)) {
    if (static_cast<int>(images_.size()) != source_.rank()) {
        throw InvalidArgument("homomorphism needs one image per generator");
    }
    for (int i = 0; i < source_.rank(); i++) {
        images_[i] = target_.reduce(images_[i]);
        if (target_.index_of(target_.scale(images_[i], source_.factors()[i])) != 0) {
            throw InvalidArgument("generator image order does not divide generator order");
        }
    }
    table_.resize(source_.order());
    for (int idx = 0; idx < source_.order(); idx++) {
        Element a = source_.element(idx);
        Element r = target_.identity();
        for (int i = 0; i < source_.rank(); i++) {
            r = target_.add(r, target_.scale(images_[i], a[i]));
        }
        table_[idx] = target_.index_of(r);
    }
}

GroupHom GroupHom::identity(const FiniteAbelianGroup &group) {
    std::vector<Element> imgs;
    for (int i = 0; i < group.rank(); i++) {
        imgs.push_back(group.generator(i));
    }
    return GroupHom(group, group, imgs);
}

IntMatrix GroupHom::matrix() const {
    IntMatrix m(target_.rank(), std::vector<int>(source_.rank(), 0));
    for (int j = 0; j < source_.rank(); j++) {
        for (int i = 0; i < target_.rank(); i++) {
            m[i][j] = images_[j][i];
        }
    }
    return m;
}

Element GroupHom::apply(const Element &a) const {
    return target_.element(table_[source_.index_of(source_.reduce(a))]);
}

bool GroupHom::is_bijective() const {
    if (source_.order() != target_.order()) {
        return false;
    }
    std::vector<char> hit(target_.order(), 0);
    for (int t : table_) {
        if (hit[t]) {
            return false;
        }
        hit[t] = 1;
    }
    return true;
}

GroupHom GroupHom::inverse() const {
    if (!is_bijective()) {
        throw InvalidArgument("homomorphism is not invertible");
    }
    std::vector<int> inv(table_.size());
    for (std::size_t i = 0; i < table_.size(); i++) {
        inv[table_[i]] = static_cast<int>(i);
    }
    std::vector<Element> imgs;
    for (int i = 0; i < target_.rank(); i++) {
        Element g = target_.generator(i);
        imgs.push_back(source_.element(inv[target_.index_of(g)]));
    }
    return GroupHom(target_, source_, imgs);
}

GroupHom GroupHom::after(const GroupHom &first) const {
    if (first.target_ != source_) {
        throw InvalidArgument("cannot compose homomorphisms with mismatched groups");
    }
    std::vector<Element> imgs;
    for (auto &g : first.images_) {
        imgs.push_back(apply(g));
    }
    return GroupHom(first.source_, target_, imgs);
}

GroupHom chi_tilde(const Bicharacter &chi) {
    const auto &g = chi.group();
    if (!chi.is_nondegenerate()) {
        throw DegenerateBicharacter("chi(a, .) is trivial for " + std::to_string(chi.left_kernel_order() - 1) +
                                    " nonzero elements");
    }
    const auto &n = g.factors();
    std::vector<Element> imgs;
    for (int i = 0; i < g.rank(); i++) {
        Element c(g.rank());
        for (int j = 0; j < g.rank(); j++) {
            long long gij = std::gcd(n[i], n[j]);
            c[j] = mod(static_cast<long long>(chi.matrix()[i][j]) * (n[j] / gij), n[j]);
        }
        imgs.push_back(c);
    }
    GroupHom h(g, g, imgs);
    if (!h.is_bijective()) {
        throw DegenerateBicharacter("chi~ is not a bijection");
    }
    return h;
}

namespace {

struct AutSearch {
    const FiniteAbelianGroup &group;
    const AutomorphismFilter &filter;
    std::size_t list_cap;
    std::vector<Element> images;
    std::vector<GroupHom> out;

    bool partial_injective() const {
        // the subgroup generated by the first k images must have order prod n_i
        int k = static_cast<int>(images.size());
        long long size = 1;
        for (int i = 0; i < k; i++) {
            size *= group.factors()[i];
        }
        std::vector<char> hit(group.order(), 0);
        Element idx(k, 0);
        for (long long t = 0; t < size; t++) {
            Element r = group.identity();
            for (int i = 0; i < k; i++) {
                r = group.add(r, group.scale(images[i], idx[i]));
            }
            int p = group.index_of(r);
            if (hit[p]) {
                return false;
            }
            hit[p] = 1;
            for (int i = k - 1; i >= 0; i--) {
                if (++idx[i] < group.factors()[i]) {
                    break;
                }
                idx[i] = 0;
            }
        }
        return true;
    }

    void run() {
        int k = static_cast<int>(images.size());
        if (k == group.rank()) {
            out.emplace_back(group, group, images);
            if (out.size() > list_cap) {
                throw CapExceeded("automorphism list exceeds cap " + std::to_string(list_cap));
            }
            return;
        }
        int n = group.factors()[k];
        for (int idx = 0; idx < group.order(); idx++) {
            Element g = group.element(idx);
            if (group.index_of(group.scale(g, n)) != 0) {
                continue;
            }
            images.push_back(g);
            if (partial_injective() && (!filter || filter(images))) {
                run();
            }
            images.pop_back();
        }
    }
};

}  // namespace

std::vector<GroupHom> automorphism_group(const FiniteAbelianGroup &group, int group_cap, const AutomorphismFilter &filter,
                                         std::size_t list_cap) {
    if (group.order() > group_cap) {
        throw CapExceeded("|G| = " + std::to_string(group.order()) + " exceeds automorphism cap " +
                          std::to_string(group_cap));
    }
    AutSearch search{group, filter, list_cap, {}, {}};
    search.run();
    std::sort(search.out.begin(), search.out.end());
    return std::move(search.out);
}

std::vector<int> generated_subgroup(const FiniteAbelianGroup &group, const std::vector<Element> &generators) {
    std::vector<char> in(group.order(), 0);
    std::vector<int> members{0};
    in[0] = 1;
    for (std::size_t head = 0; head < members.size(); head++) {
        Element a = group.element(members[head]);
        for (auto &g : generators) {
            int p = group.index_of(group.add(a, group.reduce(g)));
            if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<std::vector<int>> all_subgroups(const FiniteAbelianGroup &group, int group_cap) {
    if (group.order() > group_cap) {
        throw CapExceeded("|G| = " + std::to_string(group.order()) + " exceeds subgroup enumeration cap " +
                          std::to_string(group_cap));
    }
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier{{0}};
    found.insert({0});
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto &h : frontier) {
            std::vector<Element> gens;
            for (int p : h) {
                gens.push_back(group.element(p));
            }
            for (int x = 0; x < group.order(); x++) {
                if (std::binary_search(h.begin(), h.end(), x)) {
                    continue;
                }
                auto g2 = gens;
                g2.push_back(group.element(x));
                auto s = generated_subgroup(group, g2);
                if (found.insert(s).second) {
                    next.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace fusionchain
