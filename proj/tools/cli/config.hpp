// Key-value run configuration: built-in presets, config files (one
// `key = value` assignment per line, `#` comments), and command-line
// overrides, merged in that order.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace cli {

// invalid configuration; mapped to exit code 2
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class Config {
  public:
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    void merge_file(const std::string& path);

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get_str(const std::string& key, const std::string& fallback) const;
    std::string require_str(const std::string& key) const;
    double get_num(const std::string& key, double fallback) const;
    double require_num(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;

    const std::map<std::string, std::string>& items() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

}  // namespace cli
