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

#include <gtest/gtest.h>
#include <stdlib.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fusionchain/cache.h"
#include "fusionchain/errors.h"

using namespace fusionchain;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const {
        return Json::parse(out);
    }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

fs::path fresh_dir(const std::string &tag) {
    auto d = fs::temp_directory_path() / ("fusionchain_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    return d;
}

Json without_timing(Json j) {
    j.erase("timing");
    return j;
}

}  // namespace

TEST(cli, center_z2) {
    auto r = call({"center", "--group", "Z2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["result"]["system"]["rank"], 4);
    EXPECT_EQ(j["result"]["lagrangian_count"], 2);
    EXPECT_EQ(j["result"]["autoequivalence_count"], 2);
    std::vector<std::string> twists;
    for (auto &a : j["result"]["system"]["anyons"]) {
        twists.push_back(a["twist"]["value"]);
    }
    std::sort(twists.begin(), twists.end());
    EXPECT_EQ(twists, (std::vector<std::string>{"-1", "1", "1", "1"}));
}

TEST(cli, check_extension_kw2_fixture) {
    auto r = call({"check-extension", "--duality", fixture("kw2.json"), "--source", "electric", "--target", "electric"});
    EXPECT_EQ(r.code, 1) << r.err;
    auto j = r.json();
    EXPECT_EQ(j["verdict"], "NoExtension");
    EXPECT_EQ(j["result"]["criterion_trail"]["image_lagrangian"], "1+m");
    EXPECT_EQ(j["result"]["criterion_trail"]["target_lagrangian"], "1+e");
    EXPECT_EQ(j["result"]["criterion_trail"]["center_action"]["map"]["e"], "m");

    auto t = call({"check-extension", "--duality", "kw2", "--target", "magnetic"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.json()["result"]["torsor_size"], 2);
}

TEST(cli, check_extension_identity_reports_invariants) {
    auto r = call({"check-extension", "--duality", fixture("identity2.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto reps = r.json()["result"]["representative_invariants"];
    ASSERT_EQ(reps.size(), 2u);
    for (auto &rep : reps) {
        EXPECT_TRUE(rep["verified"].get<bool>());
        EXPECT_NEAR(rep["index"].get<double>(), 1.0, 1e-12);
        EXPECT_TRUE(rep["center_action"]["identity"].get<bool>());
    }
    EXPECT_EQ(reps[0]["torsor_difference_from_first"], 0);
    EXPECT_EQ(reps[1]["torsor_difference_from_first"], 1);
}

TEST(cli, index_kw2) {
    auto r = call({"index", "--duality", fixture("kw2.json"), "--scales", "3..7"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_NEAR(j["result"]["value"].get<double>(), std::sqrt(2.0), 1e-6);
    EXPECT_TRUE(j["result"]["converged"].get<bool>());
    EXPECT_EQ(j["provenance"]["tolerances"]["index"], 1e-6);
    EXPECT_EQ(j["parameters"]["scales"], Json::array({3, 4, 5, 6, 7}));

    auto single = call({"index", "--duality", "kw2", "--scales", "4"});
    EXPECT_EQ(single.code, 1);
}

TEST(cli, other_subcommands) {
    auto v = call({"verify-duality", "--duality", "kw2", "--window", "6"});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(v.json()["result"]["windows"].size(), 5u);
    auto s = call({"search-extension", "--duality", "kw2", "--radius", "1", "--window", "6"});
    EXPECT_EQ(s.code, 1);
    EXPECT_EQ(s.json()["verdict"], "None");
    auto s2 = call({"search-extension", "--duality", "identity2", "--radius", "1", "--window", "6"});
    EXPECT_EQ(s2.code, 0);
    auto c = call({"commutant", "--group", "Z2", "--window", "3"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.json()["result"]["commutant_dimension"], 32);
    auto q = call({"qsystem-complete", "--table", "fib"});
    EXPECT_EQ(q.code, 0);
    EXPECT_EQ(q.json()["result"]["lagrangian_count"], 1);
    auto q2 = call({"qsystem-complete", "--group", fixture("group_z2xz2.json")});
    EXPECT_EQ(q2.code, 1);
    EXPECT_EQ(q2.json()["result"]["lagrangian_count"], 6);
    auto t = call({"center", "--group", "Z3", "--format", "text"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("center: Computed"), std::string::npos);
}

TEST(cli, errors_exit_two) {
    EXPECT_EQ(call({"check-extension", "--duality", fixture("bad_nonsymmetric.json")}).code, 2);
    auto r = call({"verify-duality", "--duality", fixture("bad_unknown_key.json")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("SchemaError"), std::string::npos);
    EXPECT_EQ(call({"center"}).code, 2);
    EXPECT_EQ(call({"center", "--group", "Q8"}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"center", "--group", "Z2", "--format", "yaml"}).code, 2);
    EXPECT_EQ(call({"index", "--duality", "kw2", "--scales", "7..3"}).code, 2);
    EXPECT_EQ(call({"search-extension", "--duality", "kw2", "--radius", "9", "--window", "20"}).code, 2);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(cli, deterministic_reports) {
    auto a = call({"check-extension", "--duality", "identity3"});
    auto b = call({"check-extension", "--duality", "identity3"});
    EXPECT_EQ(without_timing(a.json()).dump(), without_timing(b.json()).dump());
    auto c = call({"index", "--duality", "kw3*kw3"});
    auto d = call({"index", "--duality", "kw3*kw3"});
    EXPECT_EQ(without_timing(c.json()).dump(), without_timing(d.json()).dump());
}

TEST(cache, hit_and_identical_reload) {
    auto dir = fresh_dir("hit");
    auto first = call({"center", "--group", "Z2", "--cache-dir", dir.string()});
    auto second = call({"center", "--group", "Z2", "--cache-dir", dir.string()});
    EXPECT_EQ(first.json()["timing"]["cache"], "miss");
    EXPECT_EQ(second.json()["timing"]["cache"], "hit");
    EXPECT_NE(second.err.find("cache hit"), std::string::npos);
    EXPECT_EQ(without_timing(first.json()).dump(), without_timing(second.json()).dump());
    fs::remove_all(dir);
}

TEST(cache, environment_variable) {
    auto dir = fresh_dir("env");
    ::setenv("FUSIONCHAIN_CACHE", dir.string().c_str(), 1);
    call({"qsystem-complete", "--group", "Z3"});
    auto again = call({"qsystem-complete", "--group", "Z3"});
    ::unsetenv("FUSIONCHAIN_CACHE");
    EXPECT_EQ(again.json()["timing"]["cache"], "hit");
    auto off = call({"qsystem-complete", "--group", "Z3"});
    EXPECT_EQ(off.json()["timing"]["cache"], "disabled");
    fs::remove_all(dir);
}

TEST(cache, version_bump_misses) {
    auto dir = fresh_dir("version");
    ResultCache v1(dir.string(), "0.1.0"), v2(dir.string(), "0.2.0");
    Json input{{"group", "Z2"}};
    v1.put(v1.key("center", input), Json{{"x", 1}});
    EXPECT_TRUE(v1.get(v1.key("center", input)).has_value());
    EXPECT_NE(v1.key("center", input), v2.key("center", input));
    EXPECT_FALSE(v2.get(v2.key("center", input)).has_value());
    EXPECT_NE(v1.key("center", input), v1.key("qsystem-complete", input));
    fs::remove_all(dir);
}

TEST(cache, corrupt_entry_evicted_and_recomputed) {
    auto dir = fresh_dir("corrupt");
    auto first = call({"center", "--group", "Z2", "--cache-dir", dir.string()});
    std::string key = first.json()["timing"]["cache_key"];
    auto path = dir / (key + ".json");
    ASSERT_TRUE(fs::exists(path));
    std::ofstream(path) << "{\"key\": \"" << key << "\", \"payl";
    auto second = call({"center", "--group", "Z2", "--cache-dir", dir.string()});
    EXPECT_EQ(second.json()["timing"]["cache"], "miss");
    EXPECT_EQ(without_timing(first.json()).dump(), without_timing(second.json()).dump());
    auto third = call({"center", "--group", "Z2", "--cache-dir", dir.string()});
    EXPECT_EQ(third.json()["timing"]["cache"], "hit");
    fs::remove_all(dir);
}

TEST(cache, fnv1a_reference_values) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
}

TEST(cli, binary_exit_codes) {
    std::string bin = CLI_BINARY;
    auto status = [&](const std::string &args) {
        int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    EXPECT_EQ(status("center --group Z2"), 0);
    EXPECT_EQ(status("check-extension --duality " + fixture("kw2.json")), 1);
    EXPECT_EQ(status("check-extension --duality " + fixture("bad_nonsymmetric.json")), 2);
}

TEST(builtins, parsing) {
    EXPECT_EQ(parse_scales("3..5"), (std::vector<int>{3, 4, 5}));
    EXPECT_EQ(parse_scales("4,6"), (std::vector<int>{4, 6}));
    EXPECT_THROW(parse_scales("x"), InvalidArgument);
    EXPECT_EQ(resolve_duality("kw2*kw2").image_x, shift_spec(2).image_x);
    EXPECT_THROW(resolve_duality("nope"), InvalidArgument);
    EXPECT_EQ(resolve_group("Z2xZ3").order(), 6);
}
