#include "genius/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace genius {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

const ConfigEntry* Config::find(const std::string& key) const {
    for (const ConfigEntry& e : entries) {
        if (e.key == key) {
            return &e;
        }
    }
    return nullptr;
}

Config parse_config(const std::string& text, const std::string& origin) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    for (int line = 1; std::getline(in, raw); ++line) {
        const std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) {
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(origin + ":" + std::to_string(line) + ": expected key=value", line);
        }
        std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](unsigned char c) {
                return std::isalnum(c) || c == '_' || c == '-';
            })) {
            throw ConfigError(origin + ":" + std::to_string(line) + ": bad key '" + key + "'", line);
        }
        std::replace(key.begin(), key.end(), '-', '_');
        if (value.empty()) {
            throw ConfigError(origin + ":" + std::to_string(line) + ": empty value for '" + key + "'", line);
        }
        auto it = std::find_if(cfg.entries.begin(), cfg.entries.end(),
                               [&](const ConfigEntry& e) { return e.key == key; });
        if (it != cfg.entries.end()) {
            cfg.warnings.push_back(origin + ":" + std::to_string(line) + ": duplicate key '" + key +
                                   "' overrides line " + std::to_string(it->line));
            it->value = value;
            it->line = line;
        } else {
            cfg.entries.push_back({key, value, line});
        }
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw ConfigError("cannot read config file " + path, 0);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), path);
}

}  // namespace genius
