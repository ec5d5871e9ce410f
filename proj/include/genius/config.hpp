#ifndef GENIUS_CONFIG_HPP
#define GENIUS_CONFIG_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genius {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    /// 1-based line of the offending entry, 0 when the file itself failed.
    int line() const { return line_; }

private:
    int line_;
};

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct Config {
    /// In file order with duplicates collapsed; a repeated key keeps its
    /// first position and its last value.
    std::vector<ConfigEntry> entries;
    std::vector<std::string> warnings;

    const ConfigEntry* find(const std::string& key) const;
};

/// Line-oriented `key = value`; `#` starts a comment; blank lines ignored.
/// Keys are letters, digits, '_' and '-', with '-' read as '_'.
Config parse_config(const std::string& text, const std::string& origin = "config");
Config load_config(const std::string& path);

}  // namespace genius

#endif
