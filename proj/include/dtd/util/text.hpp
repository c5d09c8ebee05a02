#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dtd {

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

// Whitespace tokenization after lowercasing and stripping punctuation from
// token edges. This is the statistics tokenizer: stopwords are kept.
std::vector<std::string> stat_tokens(std::string_view text);

// Token plus its [begin, end) character range in the source text.
struct TokenSpan {
  std::string text;
  int begin = 0;
  int end = 0;
};

// Splits text into word tokens (runs of word chars) and single-character
// punctuation tokens, recording character offsets. Whitespace separates.
std::vector<TokenSpan> word_tokens(std::string_view text);

// Rule-based lemmatizer used for span-overlap statistics: plural -s/-es/-ies,
// -ing and -ed with doubled-consonant repair, plus a small exception table.
std::string lemmatize(std::string_view word);

std::vector<std::string> split(std::string_view s, char sep);

}  // namespace dtd
