#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dtd/corpus.hpp"
#include "dtd/rawnote.hpp"
#include "dtd/schema.hpp"

namespace dtd {

struct RejectedToken {
  std::string note_id;
  std::string raw;
  RejectReason reason = RejectReason::Malformed;
};

// Per-note (or merged) parse accounting. accepted + rejected equals the total
// number of label-token components seen.
struct ParseReport {
  std::map<std::string, int> accepted_per_label;
  std::map<std::string, int> rejected_per_reason;
  std::vector<RejectedToken> rejected_tokens;
  int sentences = 0;
  int notes = 0;
  int empty_span_drops = 0;  // accepted labels whose prefix span was empty

  int accepted_total() const;
  int rejected_total() const;
  void merge(const ParseReport& other);
  nlohmann::json to_json() const;
};

struct Segment {
  std::string text;
  int offset = 0;  // index of first char in the note text
  bool is_section_header = false;
};

// Splits a note into sentence and section-header segments. Joining the
// segment texts at their offsets (plus the skipped gaps) reconstructs the
// note. Sentence boundaries never fall inside a bracketed label token.
std::vector<Segment> segment_note(const std::string& note_text);

// Sentence segments only, as (text, offset) pairs.
std::vector<std::pair<std::string, int>> segment_sentences(
    const std::string& note_text);

// Applies the prefix-span heuristic to one segmented sentence: every
// bracketed token delimits the running span, accepted labels annotate the
// text since the previous token (trimmed), all tokens are deleted and the
// whitespace runs they leave behind collapse to a single space. Offsets in
// the result index the cleaned text.
AnnotatedSentence extract_annotations(const std::string& sentence,
                                      const Schema& schema,
                                      ParseReport* report,
                                      const std::string& note_id = "");

std::pair<std::vector<AnnotatedSentence>, ParseReport> parse_note(
    const RawNote& raw, const Schema& schema);

std::pair<Corpus, ParseReport> parse_notes(const std::vector<RawNote>& notes,
                                           const Schema& schema);

}  // namespace dtd
