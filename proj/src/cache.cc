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

#include "fusionchain/cache.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace fusionchain {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(const std::string &data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ResultCache::ResultCache(std::string dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {
}

ResultCache ResultCache::from_environment(const std::string &flag_dir) {
    if (!flag_dir.empty()) {
        return ResultCache(flag_dir);
    }
    const char *env = std::getenv("FUSIONCHAIN_CACHE");
    return ResultCache(env ? env : "");
}

std::string ResultCache::key(const std::string &kind, const Json &input) const {
    std::string canonical = version_ + "\n" + kind + "\n" + nlohmann::json(input).dump();
    std::ostringstream ss;
    ss << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(canonical);
    return ss.str();
}

std::string ResultCache::path_for(const std::string &key) const {
    return (fs::path(dir_) / (key + ".json")).string();
}

std::optional<Json> ResultCache::get(const std::string &key) const {
    if (!enabled()) {
        return std::nullopt;
    }
    std::string path = path_for(key);
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    in.close();
    Json env = Json::parse(ss.str(), nullptr, false);
    if (env.is_discarded() || !env.is_object() || !env.contains("key") || !env.contains("version") ||
        !env.contains("payload") || env["key"] != key || env["version"] != version_) {
        std::error_code ec;
        fs::remove(path, ec);
        return std::nullopt;
    }
    return env["payload"];
}

void ResultCache::put(const std::string &key, const Json &payload) const {
    if (!enabled()) {
        return;
    }
    std::error_code ec;
    fs::create_directories(dir_, ec);
    std::random_device rd;
    std::string tmp = path_for(key) + ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp);
        if (!out) {
            return;
        }
        Json env{{"key", key}, {"version", version_}, {"payload", payload}};
        out << env.dump();
    }
    fs::rename(tmp, path_for(key), ec);
    if (ec) {
        fs::remove(tmp, ec);
    }
}

}  // namespace fusionchain
