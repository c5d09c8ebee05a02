#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dtd {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sectioned key=value config file. '#' and ';' start comments, keys live
// under the most recent [section] header, values are trimmed verbatim.
class Ini {
 public:
  static Ini parse(const std::string& text);
  static Ini load(const std::string& path);

  bool has(const std::string& section, const std::string& key) const;
  std::optional<std::string> raw(const std::string& section,
                                 const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  long long get_int(const std::string& section, const std::string& key,
                    long long fallback) const;
  double get_double(const std::string& section, const std::string& key,
                    double fallback) const;
  bool get_bool(const std::string& section, const std::string& key,
                bool fallback) const;
  std::vector<double> get_doubles(const std::string& section,
                                  const std::string& key,
                                  const std::vector<double>& fallback) const;
  std::vector<std::string> get_strings(
      const std::string& section, const std::string& key,
      const std::vector<std::string>& fallback) const;

  std::vector<std::string> sections() const;

  // Canonical serialized form (sections and keys sorted); used for config
  // hashing so formatting differences do not change the hash.
  std::string canonical() const;

 private:
  std::map<std::string, std::map<std::string, std::string>> data_;
};

}  // namespace dtd
