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


#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace covobs::cli {
namespace {

std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

Config Config::parse(const std::string &text, const std::string &origin) {
    Config config;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(number);
        if (eq == std::string::npos) {
            throw ConfigError(where, where + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError(where, where + ": empty key");
        }
        if (config.values_.count(key) != 0) {
            throw ConfigError(key, where + ": duplicate key '" + key + "'");
        }
        config.values_[key] = value;
    }
    return config;
}

Config Config::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("--config", "cannot read config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

void Config::set(const std::string &key, const std::string &value) { values_[key] = value; }

bool Config::has(const std::string &key) const { return values_.count(key) != 0; }

std::string Config::get_string(const std::string &key, const std::string &fallback) {
    used_.insert(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::string Config::require_string(const std::string &key) {
    used_.insert(key);
    const auto it = values_.find(key);
    if (it == values_.end() || it->second.empty()) {
        throw ConfigError(key, "missing required key '" + key + "'");
    }
    return it->second;
}

double Config::get_double(const std::string &key, double fallback) {
    return has(key) ? require_double(key) : (used_.insert(key), fallback);
}

double Config::require_double(const std::string &key) {
    const std::string text = require_string(key);
    double value = 0.0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw ConfigError(key, "key '" + key + "' must be a finite number, got '" + text + "'");
    }
    return value;
}

std::uint64_t Config::get_uint(const std::string &key, std::uint64_t fallback) {
    return has(key) ? require_uint(key) : (used_.insert(key), fallback);
}

std::uint64_t Config::require_uint(const std::string &key) {
    const std::string text = require_string(key);
    std::uint64_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError(key, "key '" + key + "' must be a nonnegative integer, got '" + text + "'");
    }
    return value;
}

bool Config::get_bool(const std::string &key, bool fallback) {
    const std::string text = get_string(key, fallback ? "true" : "false");
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError(key, "key '" + key + "' must be true or false, got '" + text + "'");
}

void Config::reject_unused() const {
    for (const auto &[key, value] : values_) {
        if (used_.count(key) == 0) {
            throw ConfigError(key, "unknown key '" + key + "'");
        }
    }
}

} // namespace covobs::cli
