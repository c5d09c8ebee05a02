#include "dtd/util/ini.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dtd/util/text.hpp"

namespace dtd {

Ini Ini::parse(const std::string& text) {
  Ini ini;
  std::string section;
  int lineno = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments that start a token; '#' inside values is rare enough
    // that we only honor it when preceded by whitespace or at line start.
    std::string stripped;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if ((c == '#' || c == ';') &&
          (i == 0 || is_ascii_space(line[i - 1]))) {
        break;
      }
      stripped.push_back(c);
    }
    const std::string_view t = trim(stripped);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3) {
        throw ConfigError("malformed section header at line " +
                          std::to_string(lineno) + ": " + std::string(t));
      }
      section = std::string(trim(t.substr(1, t.size() - 2)));
      ini.data_[section];
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected key=value at line " + std::to_string(lineno) +
                        ": " + std::string(t));
    }
    const std::string key(trim(t.substr(0, eq)));
    const std::string value(trim(t.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("empty key at line " + std::to_string(lineno));
    }
    ini.data_[section][key] = value;
  }
  return ini;
}

Ini Ini::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

bool Ini::has(const std::string& section, const std::string& key) const {
  const auto s = data_.find(section);
  return s != data_.end() && s->second.count(key) > 0;
}

std::optional<std::string> Ini::raw(const std::string& section,
                                    const std::string& key) const {
  const auto s = data_.find(section);
  if (s == data_.end()) return std::nullopt;
  const auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

std::string Ini::get_string(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
  return raw(section, key).value_or(fallback);
}

long long Ini::get_int(const std::string& section, const std::string& key,
                       long long fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  char* end = nullptr;
  const long long r = std::strtoll(v->c_str(), &end, 10);
  if (end == v->c_str() || *end != '\0') {
    throw ConfigError("expected integer for [" + section + "] " + key + " = " +
                      *v);
  }
  return r;
}

double Ini::get_double(const std::string& section, const std::string& key,
                       double fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  char* end = nullptr;
  const double r = std::strtod(v->c_str(), &end);
  if (end == v->c_str() || *end != '\0') {
    throw ConfigError("expected number for [" + section + "] " + key + " = " +
                      *v);
  }
  return r;
}

bool Ini::get_bool(const std::string& section, const std::string& key,
                   bool fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  const std::string s = to_lower(*v);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("expected boolean for [" + section + "] " + key + " = " +
                    *v);
}

std::vector<double> Ini::get_doubles(const std::string& section,
                                     const std::string& key,
                                     const std::vector<double>& fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  std::vector<double> out;
  for (const auto& part : split(*v, ',')) {
    const std::string p(trim(part));
    if (p.empty()) continue;
    char* end = nullptr;
    const double r = std::strtod(p.c_str(), &end);
    if (end == p.c_str() || *end != '\0') {
      throw ConfigError("expected number list for [" + section + "] " + key);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<std::string> Ini::get_strings(
    const std::string& section, const std::string& key,
    const std::vector<std::string>& fallback) const {
  const auto v = raw(section, key);
  if (!v) return fallback;
  std::vector<std::string> out;
  for (const auto& part : split(*v, ',')) {
    const std::string p(trim(part));
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

std::vector<std::string> Ini::sections() const {
  std::vector<std::string> out;
  out.reserve(data_.size());
  for (const auto& [name, _] : data_) out.push_back(name);
  return out;
}

std::string Ini::canonical() const {
  std::ostringstream out;
  for (const auto& [section, kv] : data_) {
    out << '[' << section << "]\n";
    for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
  }
  return out.str();
}

}  // namespace dtd
