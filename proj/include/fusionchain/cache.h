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

#pragma once

#include <optional>
#include <string>

#include "fusionchain/serialize.h"

namespace fusionchain {

/// On-disk result cache keyed by library version, request kind and canonical input.
class ResultCache {
   public:
    /// Empty dir disables the cache.
    explicit ResultCache(std::string dir, std::string version = FUSIONCHAIN_VERSION);

    /// --cache-dir wins over FUSIONCHAIN_CACHE.
    static ResultCache from_environment(const std::string &flag_dir);

    bool enabled() const {
        return !dir_.empty();
    }
    const std::string &dir() const {
        return dir_;
    }
    std::string key(const std::string &kind, const Json &input) const;
    /// Corrupt or mismatched entries are removed and reported as misses.
    std::optional<Json> get(const std::string &key) const;
    void put(const std::string &key, const Json &payload) const;

   private:
    std::string path_for(const std::string &key) const;
    std::string dir_;
    std::string version_;
};

std::uint64_t fnv1a64(const std::string &data);

}  // namespace fusionchain
