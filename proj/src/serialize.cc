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

#include "fusionchain/serialize.h"

#include <fstream>
#include <set>
#include <sstream>

#include "fusionchain/errors.h"

namespace fusionchain {

namespace {

void require_keys(const Json &j, const std::set<std::string> &required, const std::set<std::string> &optional,
                  const std::string &where) {
    if (!j.is_object()) {
        throw SchemaError(where + ": expected an object");
    }
    for (auto &[k, v] : j.items()) {
        if (!required.count(k) && !optional.count(k)) {
            throw SchemaError(where + ": unknown key '" + k + "'");
        }
    }
    for (auto &k : required) {
        if (!j.contains(k)) {
            throw SchemaError(where + ": missing key '" + k + "'");
        }
    }
}

int get_int(const Json &j, const std::string &key, const std::string &where) {
    if (!j.at(key).is_number_integer()) {
        throw SchemaError(where + "/" + key + ": expected an integer");
    }
    return j.at(key).get<int>();
}

void check_schema(const Json &j, const std::string &where) {
    if (j.contains("schema")) {
        if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaVersion) {
            throw SchemaError(where + "/schema: unsupported schema version (expected " +
                              std::to_string(kSchemaVersion) + ")");
        }
    }
}

const char *kImageX = "X_i";
const char *kImageB = "Z_i Z_i+1^dag";

}  // namespace

Json parse_json(const std::string &text, const std::string &source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); i++) {
            if (text[i] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        throw SchemaError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
}

Json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), path);
}

Json to_json(const Phase &p) {
    std::string text = p.num == 0 ? "1" : (p.den == 2 ? "-1" : p.str());
    return Json{{"num", p.num}, {"den", p.den}, {"value", text}};
}

Json to_json(const PauliString &p) {
    Json sites = Json::object();
    for (auto &[s, e] : p.sites()) {
        sites[std::to_string(s)] = Json::array({e.first, e.second});
    }
    return Json{{"phase", p.phase()}, {"sites", sites}};
}

PauliString pauli_from_json(const Json &j, int n, const std::string &where) {
    require_keys(j, {"phase", "sites"}, {}, where);
    int phase = get_int(j, "phase", where);
    if (phase < 0 || phase >= PauliString::phase_modulus(n)) {
        throw SchemaError(where + "/phase: must lie in [0, " + std::to_string(PauliString::phase_modulus(n)) + ")");
    }
    if (!j["sites"].is_object()) {
        throw SchemaError(where + "/sites: expected an object");
    }
    std::map<int, std::pair<int, int>> sites;
    for (auto &[k, v] : j["sites"].items()) {
        std::string w = where + "/sites/" + k;
        int s;
        try {
            std::size_t used = 0;
            s = std::stoi(k, &used);
            if (used != k.size()) {
                throw std::invalid_argument(k);
            }
        } catch (const std::exception &) {
            throw SchemaError(w + ": site index must be an integer");
        }
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
            throw SchemaError(w + ": expected [x, z]");
        }
        int x = v[0].get<int>(), z = v[1].get<int>();
        if (x < 0 || x >= n || z < 0 || z >= n) {
            throw SchemaError(w + ": exponents must lie in [0, " + std::to_string(n) + ")");
        }
        sites[s] = {x, z};
    }
    return PauliString(n, phase, sites);
}

Json to_json(const DualitySpec &spec) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["name"] = spec.name;
    j["group"] = spec.n;
    j["images"] = Json{{kImageX, to_json(spec.image_x)}, {kImageB, to_json(spec.image_b)}};
    if (spec.center_action) {
        j["center_action"] = spec.center_action->perm;
    }
    j["spread"] = spec.spread;
    return j;
}

DualitySpec duality_from_json(const Json &j) {
    require_keys(j, {"group", "images", "spread"}, {"schema", "name", "center_action"}, "");
    check_schema(j, "");
    DualitySpec s;
    s.n = get_int(j, "group", "");
    if (s.n < 2 || s.n > 64) {
        throw SchemaError("/group: cyclic order must lie in [2, 64]");
    }
    s.name = j.contains("name") ? j["name"].get<std::string>() : "user duality";
    require_keys(j["images"], {kImageX, kImageB}, {}, "/images");
    s.image_x = pauli_from_json(j["images"][kImageX], s.n, std::string("/images/") + kImageX);
    s.image_b = pauli_from_json(j["images"][kImageB], s.n, std::string("/images/") + kImageB);
    s.spread = get_int(j, "spread", "");
    if (s.spread < 0) {
        throw SchemaError("/spread: must be non-negative");
    }
    if (!s.image_x.is_symmetric()) {
        throw InvariantViolation(std::string("image of generator ") + kImageX + " is not symmetric (charge " +
                                 std::to_string(s.image_x.charge()) + ")");
    }
    if (!s.image_b.is_symmetric()) {
        throw InvariantViolation(std::string("image of generator ") + kImageB + " is not symmetric (charge " +
                                 std::to_string(s.image_b.charge()) + ")");
    }
    if (s.measured_spread() > s.spread) {
        throw InvariantViolation("images reach distance " + std::to_string(s.measured_spread()) +
                                 " beyond the declared spread " + std::to_string(s.spread));
    }
    if (j.contains("center_action")) {
        auto sys = double_of_abelian(FiniteAbelianGroup::cyclic(s.n));
        const auto &c = j["center_action"];
        if (!c.is_array() || static_cast<int>(c.size()) != sys.rank()) {
            throw SchemaError("/center_action: expected a permutation of " + std::to_string(sys.rank()) + " anyons");
        }
        BraidedAutoEq b;
        for (std::size_t k = 0; k < c.size(); k++) {
            if (!c[k].is_number_integer()) {
                throw SchemaError("/center_action/" + std::to_string(k) + ": expected an integer");
            }
            b.perm.push_back(c[k].get<int>());
        }
        if (!preserves_braiding(sys, b.perm)) {
            throw InvariantViolation("center_action is not a braided autoequivalence of " + sys.name);
        }
        s.center_action = b;
    }
    return s;
}

DualitySpec load_duality(const std::string &path) {
    return duality_from_json(load_json_file(path));
}

Json to_json(const FiniteAbelianGroup &g) {
    return Json{{"schema", kSchemaVersion}, {"cyclic_factors", g.factors()}};
}

FiniteAbelianGroup group_from_json(const Json &j) {
    require_keys(j, {"cyclic_factors"}, {"schema"}, "");
    check_schema(j, "");
    const auto &f = j["cyclic_factors"];
    if (!f.is_array()) {
        throw SchemaError("/cyclic_factors: expected an array");
    }
    std::vector<int> factors;
    for (std::size_t k = 0; k < f.size(); k++) {
        if (!f[k].is_number_integer() || f[k].get<int>() < 2) {
            throw SchemaError("/cyclic_factors/" + std::to_string(k) + ": expected an integer >= 2");
        }
        factors.push_back(f[k].get<int>());
    }
    return FiniteAbelianGroup(factors);
}

FiniteAbelianGroup load_group(const std::string &path) {
    return group_from_json(load_json_file(path));
}

Json to_json(const AnyonSystem &sys) {
    Json anyons = Json::array();
    for (int x = 0; x < sys.rank(); x++) {
        anyons.push_back(Json{{"label", sys.labels[x]}, {"twist", to_json(sys.twist[x])}, {"qdim", sys.qdims[x]}});
    }
    return Json{{"name", sys.name}, {"rank", sys.rank()}, {"anyons", anyons}};
}

Json to_json(const AnyonSystem &sys, const LagrangianAlgebra &l) {
    Json support = Json::array();
    for (int x : l.support()) {
        support.push_back(Json{{"label", sys.labels[x]}, {"multiplicity", l.multiplicity[x]}});
    }
    return Json{{"name", describe(sys, l)}, {"support", support}, {"dimension", l.dimension},
                {"certified", l.certified}};
}

Json to_json(const AnyonSystem &sys, const BraidedAutoEq &b) {
    Json m = Json::object();
    for (int x = 0; x < sys.rank(); x++) {
        m[sys.labels[x]] = sys.labels[b.perm[x]];
    }
    return Json{{"identity", b.is_identity()}, {"map", m}};
}

Json to_json(const ExtensionTable &e) {
    return Json{{"schema", kSchemaVersion},
                {"name", e.name},
                {"group", e.n},
                {"images", Json{{"X_i", to_json(e.image_x)}, {"Z_i", to_json(e.image_z)}}}};
}

ExtensionTable extension_from_json(const Json &j) {
    require_keys(j, {"group", "images"}, {"schema", "name"}, "");
    check_schema(j, "");
    ExtensionTable e;
    e.n = get_int(j, "group", "");
    if (e.n < 2 || e.n > 64) {
        throw SchemaError("/group: cyclic order must lie in [2, 64]");
    }
    e.name = j.contains("name") ? j["name"].get<std::string>() : "user extension";
    require_keys(j["images"], {"X_i", "Z_i"}, {}, "/images");
    e.image_x = pauli_from_json(j["images"]["X_i"], e.n, "/images/X_i");
    e.image_z = pauli_from_json(j["images"]["Z_i"], e.n, "/images/Z_i");
    return e;
}

Json to_json(const ExtensionVerdict &v, const AnyonSystem &sys) {
    Json j;
    j["verdict"] = v.extends ? "Torsor" : "NoExtension";
    j["source"] = to_json(sys, v.source);
    j["target"] = to_json(sys, v.target);
    j["image_of_source"] = to_json(sys, v.image);
    if (v.extends) {
        j["torsor_size"] = v.torsor_size;
        Json reps = Json::array();
        for (auto &e : v.representatives) {
            reps.push_back(to_json(e));
        }
        j["representatives"] = reps;
    } else {
        j["witness"] = "image " + describe(sys, v.image) + " differs from target " + describe(sys, v.target);
    }
    return j;
}

Json to_json(const DualityReport &r) {
    Json checks = Json::array();
    for (auto &c : r.checks) {
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return Json{{"spec", r.spec},
                {"window", r.window},
                {"measured_spread", r.measured_spread},
                {"declared_spread", r.declared_spread},
                {"passed", r.passed()},
                {"checks", checks}};
}

Json to_json(const TracedInclusion &inc) {
    return Json{{"schema", kSchemaVersion},      {"lambda", inc.lambda},
                {"small_dims", inc.small_dims},  {"large_dims", inc.large_dims},
                {"small_trace", inc.small_trace}, {"large_trace", inc.large_trace}};
}

TracedInclusion inclusion_from_json(const Json &j) {
    require_keys(j, {"lambda", "small_dims", "large_dims", "small_trace", "large_trace"}, {"schema"}, "");
    check_schema(j, "");
    TracedInclusion inc;
    try {
        inc.lambda = j["lambda"].get<std::vector<std::vector<long long>>>();
        inc.small_dims = j["small_dims"].get<std::vector<long long>>();
        inc.large_dims = j["large_dims"].get<std::vector<long long>>();
        inc.small_trace = j["small_trace"].get<std::vector<double>>();
        inc.large_trace = j["large_trace"].get<std::vector<double>>();
    } catch (const nlohmann::json::exception &e) {
        throw SchemaError(std::string("traced inclusion: ") + e.what());
    }
    inc.validate();
    return inc;
}

Json to_json(const IndexEstimate &e) {
    Json sq = Json::array();
    for (auto &s : e.squared) {
        sq.push_back(s.str());
    }
    return Json{{"subject", e.subject},   {"scales", e.scales},       {"squared_exact", sq},
                {"values", e.values},     {"value", e.value},         {"converged", e.converged},
                {"tolerance", e.tolerance}, {"buffer", e.buffer},     {"note", e.note}};
}

}  // namespace fusionchain
