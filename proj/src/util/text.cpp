#include "dtd/util/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace dtd {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_ascii_space(s[b])) ++b;
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> stat_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (const char raw : text) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(raw)));
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'') {
      cur.push_back(c);
    } else {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    }
  }
  if (!cur.empty()) out.push_back(cur);
  // Edge apostrophes come from quoting, interior ones ("patient's") stay.
  for (auto& t : out) {
    while (!t.empty() && t.front() == '\'') t.erase(t.begin());
    while (!t.empty() && t.back() == '\'') t.pop_back();
  }
  std::erase_if(out, [](const std::string& t) { return t.empty(); });
  return out;
}

std::vector<TokenSpan> word_tokens(std::string_view text) {
  std::vector<TokenSpan> out;
  int i = 0;
  const int n = static_cast<int>(text.size());
  while (i < n) {
    if (is_ascii_space(text[i])) {
      ++i;
      continue;
    }
    if (is_word_char(text[i])) {
      int j = i;
      while (j < n && is_word_char(text[j])) ++j;
      out.push_back({std::string(text.substr(i, j - i)), i, j});
      i = j;
    } else {
      out.push_back({std::string(1, text[i]), i, i + 1});
      ++i;
    }
  }
  return out;
}

namespace {
bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Undo consonant doubling after stripping -ing/-ed: "stopped" -> "stopp" -> "stop".
void repair_doubling(std::string& s) {
  const std::size_t n = s.size();
  if (n >= 3 && s[n - 1] == s[n - 2] && !is_vowel(s[n - 1]) &&
      s[n - 1] != 'l' && s[n - 1] != 's') {
    s.pop_back();
  }
}
}  // namespace

std::string lemmatize(std::string_view word) {
  static const std::map<std::string, std::string, std::less<>> exceptions = {
      {"was", "be"},       {"were", "be"},    {"is", "be"},
      {"are", "be"},       {"been", "be"},    {"has", "have"},
      {"had", "have"},     {"children", "child"}, {"men", "man"},
      {"women", "woman"},  {"feet", "foot"},  {"felt", "feel"},
      {"took", "take"},    {"taken", "take"}, {"does", "do"},
      {"did", "do"},       {"said", "say"},   {"went", "go"},
      {"worse", "bad"},    {"better", "good"}};

  std::string w = to_lower(word);
  if (auto it = exceptions.find(w); it != exceptions.end()) return it->second;
  const std::size_t n = w.size();

  if (n >= 5 && w.ends_with("ies")) {
    w.erase(n - 3);
    w.push_back('y');
    return w;
  }
  if (n >= 5 && w.ends_with("ing")) {
    w.erase(n - 3);
    repair_doubling(w);
    return w;
  }
  if (n >= 4 && w.ends_with("ed") && !w.ends_with("eed")) {
    w.erase(n - 2);
    repair_doubling(w);
    if (!w.empty() && !is_vowel(w.back()) && w.size() >= 2 &&
        !is_vowel(w[w.size() - 2]) && w.back() == 'v') {
      w.push_back('e');  // "involved" -> "involv" -> "involve"
    }
    return w;
  }
  if (n >= 4 && (w.ends_with("ses") || w.ends_with("xes") ||
                 w.ends_with("zes") || w.ends_with("ches") ||
                 w.ends_with("shes"))) {
    w.erase(w.size() - 2);
    return w;
  }
  if (n >= 3 && w.back() == 's' && !w.ends_with("ss") && !w.ends_with("us") &&
      !w.ends_with("is")) {
    w.pop_back();
    return w;
  }
  return w;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace dtd
