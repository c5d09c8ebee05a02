#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtd/corpus.hpp"
#include "dtd/schema.hpp"

namespace dtd {

// Word counts over annotated span texts, accumulated per label and globally.
// Accumulation is a commutative monoid: merge() in any order gives the same
// statistics.
struct CorpusStatistics {
  struct PerLabel {
    std::map<std::string, int> word_freq;      // w_l
    std::map<std::string, int> span_occurrences;  // #spans containing the word
    int total_words = 0;                       // W_l
    int span_count = 0;
  };
  std::map<std::string, PerLabel> per_label;   // keyed by label name
  std::map<std::string, int> global_word_freq;  // w

  void add_span(const Label& label, std::string_view span_text);
  void merge(const CorpusStatistics& other);
};

CorpusStatistics corpus_statistics(const Corpus& corpus);

struct RankedWord {
  std::string word;
  double score = 0.0;
  double prevalence = 0.0;  // spans containing the word / label span count
};

// Eq-style TF-IDF over span words: (w_l / W_l) / ln(w / w_l + 1), natural
// log. Descending by score, ties broken alphabetically. Empty for labels
// with no spans.
std::vector<RankedWord> tfidf_rank(const CorpusStatistics& stats,
                                   const Label& label, int k);

// Words of the factor name (underscores split, polarity words excluded).
std::vector<std::string> label_words(const Label& label);

// True when every label word appears as a token of the span text.
bool is_explicit_span(std::string_view span_text, const Label& label);

// Fraction of the label's spans that mention all label words explicitly.
double explicit_mention_rate(const Corpus& corpus, const Label& label);

// Mean pairwise Jaccard similarity of lemmatized span word sets. Exact up to
// pair_budget pairs, uniform seeded sample beyond. Absent for labels with
// fewer than two spans.
std::optional<double> jaccard_similarity(const Corpus& corpus, const Label& label,
                                         std::int64_t pair_budget = 200000,
                                         std::uint64_t seed = 0);

struct DiversityReport {
  struct LabelRow {
    std::string label;
    int span_count = 0;
    std::vector<RankedWord> top_words;
    double explicit_rate = 0.0;
    std::optional<double> jaccard;
  };
  std::vector<LabelRow> rows;  // label-space order, sentinel included last
  int top_k = 10;

  nlohmann::json to_json() const;
  // Aligned text table, one block per label.
  std::string to_text() const;
};

DiversityReport diversity_report(const Corpus& corpus, const Schema& schema,
                                 int top_k = 10,
                                 std::int64_t pair_budget = 200000,
                                 std::uint64_t seed = 0);

}  // namespace dtd
