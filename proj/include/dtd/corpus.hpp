#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtd/schema.hpp"

namespace dtd {

// Character span, end exclusive, indexed into the cleaned sentence text.
struct SpanAnnotation {
  int start = 0;
  int end = 0;
  Label label;

  friend bool operator==(const SpanAnnotation&, const SpanAnnotation&) = default;
};

// Builder-stage provenance; empty for freshly parsed sentences.
struct Provenance {
  std::vector<std::string> flags;
  std::optional<int> duplicate_of;          // source sentence position
  std::optional<std::uint64_t> noise_seed;  // stream seed used by inject_noise

  bool empty() const {
    return flags.empty() && !duplicate_of && !noise_seed;
  }
};

struct AnnotatedSentence {
  std::string note_id;
  int sentence_index = 0;
  std::string text;  // label tokens removed
  std::vector<SpanAnnotation> annotations;  // sorted by start; empty => sentinel
  std::optional<std::string> section_tag;
  Provenance provenance;

  nlohmann::json to_json() const;
  static AnnotatedSentence from_json(const nlohmann::json& j);
};

struct Corpus {
  SchemaVersion version = SchemaVersion::V1;
  std::vector<AnnotatedSentence> sentences;

  int annotation_count() const;
};

// JSONL with a header line carrying the schema version (and optionally the
// hash of the config that produced the file).
void write_corpus(const std::string& path, const Corpus& corpus,
                  const std::string& config_hash = "");
Corpus read_corpus(const std::string& path);

}  // namespace dtd
