// Copyright 2026 The covobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace covobs::cli {

/// Bad or missing configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string &what)
        : std::runtime_error(what), field_(std::move(field)) {}
    [[nodiscard]] const std::string &field() const noexcept { return field_; }

  private:
    std::string field_;
};

/**
 * Flat key = value configuration.  Lines starting with '#' (or the part of
 * a line after '#') are comments.  Every lookup marks the key as used so
 * leftovers can be reported as unknown.
 */
class Config {
  public:
    static Config parse(const std::string &text, const std::string &origin = "config");
    static Config load(const std::string &path);

    void set(const std::string &key, const std::string &value);
    [[nodiscard]] bool has(const std::string &key) const;

    std::string get_string(const std::string &key, const std::string &fallback);
    std::string require_string(const std::string &key);
    double get_double(const std::string &key, double fallback);
    double require_double(const std::string &key);
    std::uint64_t get_uint(const std::string &key, std::uint64_t fallback);
    std::uint64_t require_uint(const std::string &key);
    bool get_bool(const std::string &key, bool fallback);

    /// Throws ConfigError for the first key never looked up.
    void reject_unused() const;

  private:
    std::map<std::string, std::string> values_;
    std::set<std::string> used_;
};

} // namespace covobs::cli
