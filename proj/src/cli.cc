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

#include "fusionchain/cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <functional>
#include <regex>
#include <sstream>

#include "fusionchain/cache.h"
#include "fusionchain/chainalg.h"
#include "fusionchain/errors.h"
#include "fusionchain/fusion.h"
#include "fusionchain/index.h"

namespace fusionchain {

namespace {

struct Options {
    std::string group;
    std::string table;
    std::string duality;
    std::string source = "electric";
    std::string target = "electric";
    std::string scales = "3..7";
    std::string format = "json";
    std::string cache_dir;
    int window = 0;
    int radius = 2;
    int buffer = kDefaultIndexBuffer;
    double tolerance = 1e-6;
};

struct Outcome {
    std::string verdict;
    int code = kExitPass;
    Json result;
};

constexpr double kCommutantCutoff = 1e-9;
constexpr double kDenseTolerance = 1e-10;
constexpr double kModularTolerance = 1e-9;
constexpr int kMaxWindow = 64;
constexpr double kCouplingJ = 1.0;
constexpr double kCouplingH = 0.5;

int window_or(const Options &o, int fallback) {
    return o.window > 0 ? o.window : fallback;
}

AnyonSystem resolve_system(const Options &o) {
    if (!o.table.empty() && !o.group.empty()) {
        throw InvalidArgument("give either --group or --table, not both");
    }
    if (!o.table.empty()) {
        return modular_table(o.table);
    }
    if (o.group.empty()) {
        throw InvalidArgument("--group or --table is required");
    }
    return double_of_abelian(resolve_group(o.group));
}

DualitySpec require_duality(const Options &o) {
    if (o.duality.empty()) {
        throw InvalidArgument("--duality is required");
    }
    return resolve_duality(o.duality);
}

Json system_params(const Options &o) {
    Json p;
    if (!o.table.empty()) {
        p["table"] = o.table;
    } else {
        p["group"] = o.group;
        if (std::filesystem::is_regular_file(o.group)) {
            p["group_factors"] = resolve_group(o.group).factors();
        }
    }
    return p;
}

Json duality_params(const Options &o, const DualitySpec &spec) {
    return Json{{"duality", o.duality}, {"duality_spec", to_json(spec)}};
}

Outcome cmd_center(const Options &o, Json &params) {
    params = system_params(o);
    auto sys = resolve_system(o);
    Outcome r;
    r.result["system"] = to_json(sys);
    Json ls = Json::array();
    for (auto &l : lagrangian_algebras(sys)) {
        ls.push_back(to_json(sys, l));
    }
    r.result["lagrangian_count"] = ls.size();
    r.result["lagrangians"] = ls;
    if (sys.pointed()) {
        auto autos = braided_autoequivalences(sys);
        Json as = Json::array();
        for (auto &b : autos) {
            as.push_back(to_json(sys, b));
        }
        r.result["autoequivalence_count"] = autos.size();
        r.result["autoequivalences"] = as;
    } else {
        r.result["autoequivalences_note"] = "braided autoequivalences are enumerated for pointed systems only";
    }
    r.verdict = "Computed";
    return r;
}

Outcome cmd_verify(const Options &o, Json &params) {
    auto spec = require_duality(o);
    int w = window_or(o, 10);
    params = duality_params(o, spec);
    params["window"] = w;
    params["windows"] = "2.." + std::to_string(w);
    params["couplings"] = Json{{"J", kCouplingJ}, {"h", kCouplingH}};
    if (w < 2 || w > kMaxWindow) {
        throw InvalidArgument("--window must lie in [2, " + std::to_string(kMaxWindow) + "]");
    }
    Outcome r;
    bool all = true;
    Json reports = Json::array();
    for (int n = 2; n <= w; n++) {
        auto rep = verify_duality(spec, n, false);
        all = all && rep.passed();
        reports.push_back(to_json(rep));
    }
    r.result["windows"] = reports;
    r.result["measured_spread"] = spec.measured_spread();
    r.result["declared_spread"] = spec.spread;
    auto mapped = mapped_couplings(spec, kCouplingJ, kCouplingH);
    if (mapped) {
        r.result["intertwine"] = Json{{"maps_to_clock_model", true}, {"J", mapped->first}, {"h", mapped->second},
                                      {"exact", true}};
    } else {
        r.result["intertwine"] = Json{{"maps_to_clock_model", false}};
    }
    r.result["passed"] = all;
    r.verdict = all ? "Verified" : "Failed";
    r.code = all ? kExitPass : kExitNegative;
    return r;
}

Outcome cmd_check_extension(const Options &o, Json &params) {
    auto spec = require_duality(o);
    int w = window_or(o, 6);
    params = duality_params(o, spec);
    params["source"] = o.source;
    params["target"] = o.target;
    params["window"] = w;
    params["scales"] = parse_scales(o.scales);
    params["buffer"] = o.buffer;
    params["tolerance"] = o.tolerance;
    auto sys = double_of_abelian(FiniteAbelianGroup::cyclic(spec.n));
    auto ls = lagrangian_by_name(sys, o.source);
    auto lt = lagrangian_by_name(sys, o.target);
    auto v = check_extension(spec, ls, lt, w);
    Outcome r;
    r.result = to_json(v, sys);
    Json trail;
    trail["center"] = sys.name;
    trail["center_action"] = to_json(sys, *spec.center_action);
    trail["source_lagrangian"] = describe(sys, v.source);
    trail["image_lagrangian"] = describe(sys, v.image);
    trail["target_lagrangian"] = describe(sys, v.target);
    trail["image_equals_target"] = v.extends;
    if (v.extends) {
        trail["torsor_size"] = v.torsor_size;
    }
    r.result["criterion_trail"] = trail;
    if (v.extends && v.representatives.empty()) {
        r.result["representatives_note"] =
            "explicit representatives are built when source and target are both electric (full-chain automorphisms)";
    }
    if (!v.representatives.empty()) {
        auto scales = parse_scales(o.scales);
        Json reps = Json::array();
        for (auto &e : v.representatives) {
            auto est = ind_estimate(e, scales, o.buffer, o.tolerance);
            reps.push_back(Json{{"name", e.name},
                                {"verified", verify_extension(e, w).passed()},
                                {"index", est.value},
                                {"index_converged", est.converged},
                                {"center_action", to_json(sys, *spec.center_action)},
                                {"torsor_difference_from_first", torsor_difference(v.representatives[0], e, w)}});
        }
        r.result["representative_invariants"] = reps;
    }
    r.verdict = v.extends ? "Torsor" : "NoExtension";
    r.code = v.extends ? kExitPass : kExitNegative;
    return r;
}

Outcome cmd_search(const Options &o, Json &params) {
    auto spec = require_duality(o);
    int w = window_or(o, 8);
    params = duality_params(o, spec);
    params["radius"] = o.radius;
    params["window"] = w;
    params["search_cap"] = kDefaultSearchCap;
    if (o.radius < 0) {
        throw InvalidArgument("--radius must be non-negative");
    }
    Outcome r;
    Json per = Json::array();
    std::size_t total = 0;
    Json found = Json::array();
    std::vector<Json> rows;
    for (int R = o.radius; R >= 0; R--) {
        auto sols = clifford_extension_search_all(spec, R, w);
        rows.insert(rows.begin(), Json{{"radius", R}, {"solutions", sols.size()}});
        if (R == o.radius) {
            total = sols.size();
            for (auto &e : sols) {
                found.push_back(to_json(e));
            }
        }
    }
    for (auto &row : rows) {
        per.push_back(row);
    }
    r.result["per_radius"] = per;
    r.result["solutions"] = total;
    r.result["extensions"] = found;
    r.result["ansatz"] = "translation-covariant Pauli images of Z_0 supported on [-R, R]";
    r.result["summary"] = total > 0 ? "Clifford-ansatz extension found" : "no Clifford-ansatz extension";
    if (spec.center_action) {
        auto sys = double_of_abelian(FiniteAbelianGroup::cyclic(spec.n));
        auto e = electric_algebra(sys);
        auto v = check_extension(spec, e, e, std::min(w, 6));
        r.result["center_criterion_verdict"] = Json{{"source", describe(sys, e)},
                                           {"target", describe(sys, e)},
                                           {"image", describe(sys, v.image)},
                                           {"verdict", v.extends ? "Torsor" : "NoExtension"}};
    }
    r.verdict = total > 0 ? "Found" : "None";
    r.code = total > 0 ? kExitPass : kExitNegative;
    return r;
}

Outcome cmd_index(const Options &o, Json &params) {
    auto spec = require_duality(o);
    auto scales = parse_scales(o.scales);
    params = duality_params(o, spec);
    params["scales"] = scales;
    params["buffer"] = o.buffer;
    params["tolerance"] = o.tolerance;
    auto est = ind_estimate(spec, scales, o.buffer, o.tolerance);
    Outcome r;
    r.result = to_json(est);
    r.verdict = est.converged ? "Converged" : "NotConverged";
    r.code = est.converged ? kExitPass : kExitNegative;
    return r;
}

Outcome cmd_commutant(const Options &o, Json &params) {
    if (o.group.empty()) {
        throw InvalidArgument("--group is required");
    }
    auto group = resolve_group(o.group);
    int k = window_or(o, 3);
    params = system_params(o);
    params["window"] = k;
    params["commutant_cap"] = kDefaultCommutantCap;
    auto c = symmetric_commutant(group, k);
    auto rep = rep_category(group);
    std::vector<int> all(group.order());
    for (int i = 0; i < group.order(); i++) {
        all[i] = i;
    }
    auto m = power_decompose(rep, ObjectExpr::sum(group.order(), all), k);
    long long fusion_dim = end_dimension(m);
    Outcome r;
    r.result = Json{{"sites", k},
                    {"commutant_dimension", c.dimension()},
                    {"block_sizes", c.block_sizes},
                    {"multiplicities", m.mult},
                    {"fusion_dimension", fusion_dim},
                    {"equal", c.dimension() == fusion_dim},
                    {"null_space_cutoff", kCommutantCutoff}};
    r.verdict = c.dimension() == fusion_dim ? "Equal" : "Mismatch";
    r.code = c.dimension() == fusion_dim ? kExitPass : kExitNegative;
    return r;
}

Outcome cmd_qsystem(const Options &o, Json &params) {
    params = system_params(o);
    params["modular_tolerance"] = kModularTolerance;
    auto sys = resolve_system(o);
    auto rep = qsystem_completeness_report(sys);
    Outcome r;
    Json ls = Json::array();
    for (auto &l : rep.algebras) {
        ls.push_back(to_json(sys, l));
    }
    r.result = Json{{"system", rep.system},
                    {"lagrangian_count", rep.lagrangian_count},
                    {"certified", rep.certified},
                    {"complete", rep.complete},
                    {"lagrangians", ls}};
    if (!rep.certified) {
        r.result["note"] = "candidates satisfy necessary conditions only";
    }
    r.verdict = rep.complete ? "Complete" : "NotComplete";
    r.code = rep.complete ? kExitPass : kExitNegative;
    return r;
}

Json provenance(const Options &o) {
    return Json{{"library", "fusionchain"},
                {"version", FUSIONCHAIN_VERSION},
                {"tolerances",
                 {{"index", o.tolerance},
                  {"commutant_null_space", kCommutantCutoff},
                  {"dense_relations", kDenseTolerance},
                  {"modular_data", kModularTolerance},
                  {"pauli_algebra", "exact"}}},
                {"caps",
                 {{"group_order", kDefaultGroupCap},
                  {"window", kMaxWindow},
                  {"commutant_dimension", kDefaultCommutantCap},
                  {"search_candidates", kDefaultSearchCap}}}};
}

void emit(const Json &report, const std::string &format, std::ostream &out) {
    if (format != "text") {
        out << report.dump(2) << "\n";
        return;
    }
    out << report["command"].get<std::string>() << ": " << report["verdict"].get<std::string>() << " (exit "
        << report["exit_code"].get<int>() << ")\n";
    if (report.contains("error")) {
        out << "error: " << report["error"]["message"].get<std::string>() << "\n";
    }
    if (report.contains("parameters")) {
        out << "parameters: " << report["parameters"].dump() << "\n";
    }
    if (report.contains("result")) {
        for (auto &[k, v] : report["result"].items()) {
            if (v.is_array() && !v.empty() && v[0].is_structured()) {
                out << k << ":\n";
                for (auto &item : v) {
                    out << "  - " << item.dump() << "\n";
                }
            } else {
                out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    }
    out << "tolerances: " << report["provenance"]["tolerances"].dump() << "\n";
    out << "caps: " << report["provenance"]["caps"].dump() << "\n";
    out << report["provenance"]["library"].get<std::string>() << " " << report["provenance"]["version"].get<std::string>()
        << "\n";
}

}  // namespace

DualitySpec resolve_duality(const std::string &text) {
    if (std::filesystem::is_regular_file(text)) {
        return load_duality(text);
    }
    auto star = text.find('*');
    if (star != std::string::npos) {
        return compose(resolve_duality(text.substr(0, star)), resolve_duality(text.substr(star + 1)));
    }
    static const std::regex builtin("(kw|identity|shift|conj)([0-9]+)");
    std::smatch m;
    if (!std::regex_match(text, m, builtin)) {
        throw InvalidArgument("unknown duality '" + text + "' (expected a file or kw<n>, identity<n>, shift<n>, conj<n>)");
    }
    int n = std::stoi(m[2]);
    if (n < 2 || n > kMaxWindow) {
        throw InvalidArgument("cyclic order must lie in [2, 64]");
    }
    if (m[1] == "kw") {
        return kramers_wannier_spec(n);
    }
    if (m[1] == "identity") {
        return identity_spec(n);
    }
    if (m[1] == "shift") {
        return shift_spec(n);
    }
    return charge_conjugation_spec(n);
}

FiniteAbelianGroup resolve_group(const std::string &text) {
    if (std::filesystem::is_regular_file(text)) {
        return load_group(text);
    }
    return FiniteAbelianGroup::parse(text);
}

std::vector<int> parse_scales(const std::string &text) {
    static const std::regex range("([0-9]+)\\.\\.([0-9]+)");
    static const std::regex list("[0-9]+(,[0-9]+)*");
    std::smatch m;
    std::vector<int> out;
    if (std::regex_match(text, m, range)) {
        int a = std::stoi(m[1]), b = std::stoi(m[2]);
        if (a > b) {
            throw InvalidArgument("empty scale range '" + text + "'");
        }
        for (int s = a; s <= b; s++) {
            out.push_back(s);
        }
    } else if (std::regex_match(text, list)) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(std::stoi(item));
        }
    } else {
        throw InvalidArgument("cannot parse scales '" + text + "' (use 3..7 or 3,4,5)");
    }
    for (int s : out) {
        if (s < 1 || s > kMaxWindow) {
            throw InvalidArgument("scales must lie in [1, 64]");
        }
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"fusionchain: fusion spin chains, dualities and QCA extensions", "fusionchain"};
    app.set_version_flag("--version", FUSIONCHAIN_VERSION);
    app.require_subcommand(1);

    using Handler = std::function<Outcome(const Options &, Json &)>;
    struct Command {
        CLI::App *app;
        Handler handler;
        bool cached;
    };
    std::vector<Command> commands;
    auto add = [&](const std::string &name, const std::string &help, Handler h, bool cached) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("--group", o.group, "Group string (Z2, Z2xZ3) or group JSON file");
        sub->add_option("--table", o.table, "Modular table: fib, ising");
        sub->add_option("--duality", o.duality, "Duality JSON file or builtin (kw2, identity3, shift2, kw2*kw2)");
        sub->add_option("--source", o.source, "Source Lagrangian (electric, magnetic or display name)");
        sub->add_option("--target", o.target, "Target Lagrangian");
        sub->add_option("--scales", o.scales, "Index scales, 3..7 or 3,4,5");
        sub->add_option("--window", o.window, "Window size in sites");
        sub->add_option("--radius", o.radius, "Largest ansatz radius for search-extension");
        sub->add_option("--buffer", o.buffer, "Index buffer sites");
        sub->add_option("--tolerance", o.tolerance, "Index convergence tolerance");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--cache-dir", o.cache_dir, "Cache directory (env FUSIONCHAIN_CACHE)");
        commands.push_back({sub, std::move(h), cached});
    };
    add("center", "Anyons, Lagrangian algebras and braided autoequivalences", cmd_center, true);
    add("verify-duality", "Check relations, generation and spread of a duality", cmd_verify, false);
    add("check-extension", "Decide QCA extendability between two Lagrangians", cmd_check_extension, false);
    add("search-extension", "Exhaustive Clifford-ansatz search for an extension", cmd_search, false);
    add("index", "Index estimate of a duality on half-chains", cmd_index, false);
    add("commutant", "Commutant of the on-site symmetry against fusion data", cmd_commutant, false);
    add("qsystem-complete", "Enumerate Lagrangian algebras and decide Q-system completeness", cmd_qsystem, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitError;
    }

    const Command *cmd = nullptr;
    for (auto &c : commands) {
        if (c.app->parsed()) {
            cmd = &c;
        }
    }
    std::string name = cmd->app->get_name();
    auto start = std::chrono::steady_clock::now();
    Json report;
    report["schema"] = kSchemaVersion;
    report["command"] = name;
    try {
        Json params;
        Outcome outcome;
        std::string cache_state = "disabled";
        auto cache = ResultCache::from_environment(o.cache_dir);
        std::string key;
        std::optional<Json> hit;
        if (cmd->cached && cache.enabled()) {
            Json probe = system_params(o);
            key = cache.key(name, probe);
            hit = cache.get(key);
        }
        if (hit) {
            params = (*hit)["parameters"];
            outcome.verdict = (*hit)["verdict"].get<std::string>();
            outcome.code = (*hit)["exit_code"].get<int>();
            outcome.result = (*hit)["result"];
            cache_state = "hit";
            err << "cache hit " << key << "\n";
        } else {
            outcome = cmd->handler(o, params);
            if (cmd->cached && cache.enabled()) {
                cache.put(key, Json{{"parameters", params},
                                    {"verdict", outcome.verdict},
                                    {"exit_code", outcome.code},
                                    {"result", outcome.result}});
                cache_state = "miss";
                err << "cache miss " << key << "\n";
            }
        }
        params["format"] = o.format;
        report["parameters"] = params;
        report["verdict"] = outcome.verdict;
        report["exit_code"] = outcome.code;
        report["result"] = outcome.result;
        report["provenance"] = provenance(o);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report["timing"] = Json{{"elapsed_ms", ms}, {"cache", cache_state}};
        if (!key.empty()) {
            report["timing"]["cache_key"] = key;
        }
        emit(report, o.format, out);
        return outcome.code;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        report["verdict"] = "Error";
        report["exit_code"] = static_cast<int>(kExitError);
        report["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
        report["provenance"] = provenance(o);
        emit(report, o.format, out);
        return kExitError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace fusionchain
