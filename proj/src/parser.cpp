#include "dtd/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "dtd/util/text.hpp"

namespace dtd {

int ParseReport::accepted_total() const {
  int n = 0;
  for (const auto& [_, c] : accepted_per_label) n += c;
  return n;
}

int ParseReport::rejected_total() const {
  int n = 0;
  for (const auto& [_, c] : rejected_per_reason) n += c;
  return n;
}

void ParseReport::merge(const ParseReport& other) {
  for (const auto& [k, v] : other.accepted_per_label) accepted_per_label[k] += v;
  for (const auto& [k, v] : other.rejected_per_reason) rejected_per_reason[k] += v;
  rejected_tokens.insert(rejected_tokens.end(), other.rejected_tokens.begin(),
                         other.rejected_tokens.end());
  sentences += other.sentences;
  notes += other.notes;
  empty_span_drops += other.empty_span_drops;
}

nlohmann::json ParseReport::to_json() const {
  nlohmann::json rejected = nlohmann::json::array();
  for (const auto& t : rejected_tokens) {
    rejected.push_back({{"note_id", t.note_id},
                        {"raw", t.raw},
                        {"reason", reject_reason_name(t.reason)}});
  }
  return {{"accepted_per_label", accepted_per_label},
          {"rejected_per_reason", rejected_per_reason},
          {"rejected_tokens", rejected},
          {"sentences", sentences},
          {"notes", notes},
          {"empty_span_drops", empty_span_drops},
          {"accepted_total", accepted_total()},
          {"rejected_total", rejected_total()}};
}

namespace {

bool is_upper_or_digit(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Words that end with '.' without ending a sentence.
bool is_abbreviation(const std::string& text, int period_pos) {
  static const std::array<const char*, 13> stoplist = {
      "y.o.", "e.g.", "i.e.", "etc.", "vs.", "dr.", "mr.", "mrs.",
      "ms.",  "st.",  "no.",  "approx.", "p.r.n."};
  // Collect up to 12 chars of [letters|dots] ending at the period.
  int b = period_pos;
  while (b > 0 && period_pos - b < 12) {
    const char c = text[b - 1];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '.') {
      --b;
    } else {
      break;
    }
  }
  const std::string cand = to_lower(text.substr(b, period_pos - b + 1));
  for (const char* a : stoplist) {
    if (cand == a || cand.ends_with(std::string(".") + a)) return true;
  }
  return false;
}

bool line_is_section_header(std::string_view line) {
  const std::string_view t = trim(line);
  if (t.size() < 3 || t.size() > 60 || t.back() != ':') return false;
  int words = 1;
  bool has_letter = false;
  for (const char c : t.substr(0, t.size() - 1)) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      has_letter = true;
    } else if (c == ' ') {
      ++words;
    } else if (c == '.' || c == '!' || c == '?' || c == '[' || c == ']' ||
               c == ':') {
      return false;
    }
  }
  return has_letter && words <= 5;
}

// Sentence-splits the half-open range [begin, end) of the note, appending
// trimmed segments. Boundaries: terminal punctuation followed by whitespace
// and an uppercase letter or digit (outside brackets, not after an
// abbreviation), or a blank line.
void split_sentences_into(const std::string& text, int begin, int end,
                          std::vector<Segment>* out) {
  auto flush = [&](int from, int to) {
    while (from < to && is_ascii_space(text[from])) ++from;
    while (to > from && is_ascii_space(text[to - 1])) --to;
    if (from < to) {
      out->push_back({text.substr(from, to - from), from, false});
    }
  };

  int sent_start = begin;
  int depth = 0;
  int i = begin;
  while (i < end) {
    const char c = text[i];
    if (c == '[') ++depth;
    if (c == ']' && depth > 0) --depth;

    if (depth == 0 && (c == '.' || c == '!' || c == '?')) {
      int j = i + 1;
      while (j < end && (text[j] == ' ' || text[j] == '\t')) ++j;
      bool newline_seen = false;
      while (j < end && text[j] == '\n' && !newline_seen) {
        newline_seen = true;
        ++j;
        while (j < end && (text[j] == ' ' || text[j] == '\t')) ++j;
      }
      const bool at_end = j >= end;
      const bool next_starts_sentence =
          !at_end && j > i + 1 && is_upper_or_digit(text[j]);
      if ((at_end || next_starts_sentence) &&
          !(c == '.' && is_abbreviation(text, i))) {
        flush(sent_start, i + 1);
        sent_start = i + 1;
        i = j;
        continue;
      }
    }
    if (depth == 0 && c == '\n') {
      int j = i + 1;
      while (j < end && (text[j] == ' ' || text[j] == '\t')) ++j;
      if (j < end && text[j] == '\n') {  // blank line: paragraph break
        flush(sent_start, i);
        sent_start = j + 1;
        i = j + 1;
        continue;
      }
    }
    ++i;
  }
  flush(sent_start, end);
}

}  // namespace

std::vector<Segment> segment_note(const std::string& note_text) {
  std::vector<Segment> segments;
  const int n = static_cast<int>(note_text.size());
  int block_start = 0;
  int line_start = 0;
  for (int i = 0; i <= n; ++i) {
    if (i < n && note_text[i] != '\n') continue;
    const std::string_view line(note_text.data() + line_start, i - line_start);
    if (line_is_section_header(line)) {
      split_sentences_into(note_text, block_start, line_start, &segments);
      const std::string_view t = trim(line);
      const int off = line_start +
                      static_cast<int>(t.data() - (note_text.data() + line_start));
      segments.push_back({std::string(t), off, true});
      block_start = i + 1;
    }
    line_start = i + 1;
  }
  split_sentences_into(note_text, block_start, n, &segments);
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.offset < b.offset; });
  return segments;
}

std::vector<std::pair<std::string, int>> segment_sentences(
    const std::string& note_text) {
  std::vector<std::pair<std::string, int>> out;
  for (auto& seg : segment_note(note_text)) {
    if (!seg.is_section_header) out.emplace_back(seg.text, seg.offset);
  }
  return out;
}

namespace {

struct BracketToken {
  int begin = 0;  // position of '['
  int end = 0;    // position after ']'
  std::vector<Label> accepted;
};

// Splits the bracket interior on commas; each component is an independent
// label-token candidate (compound brackets list several).
std::vector<std::string> bracket_components(std::string_view interior) {
  std::vector<std::string> parts;
  for (const auto& p : split(interior, ',')) {
    const std::string t(trim(p));
    if (!t.empty()) parts.push_back(t);
  }
  if (parts.empty()) parts.emplace_back();
  return parts;
}

}  // namespace

AnnotatedSentence extract_annotations(const std::string& sentence,
                                      const Schema& schema,
                                      ParseReport* report,
                                      const std::string& note_id) {
  std::vector<BracketToken> tokens;
  const int n = static_cast<int>(sentence.size());
  int i = 0;
  while (i < n) {
    if (sentence[i] != '[') {
      ++i;
      continue;
    }
    const std::size_t close = sentence.find(']', static_cast<std::size_t>(i));
    if (close == std::string::npos) break;  // unclosed bracket: literal text
    BracketToken tok;
    tok.begin = i;
    tok.end = static_cast<int>(close) + 1;
    const std::string_view interior(sentence.data() + i + 1,
                                    close - static_cast<std::size_t>(i) - 1);
    for (const auto& comp : bracket_components(interior)) {
      const LabelParse parse = schema.parse_label_token(comp);
      if (parse.ok()) {
        tok.accepted.push_back(*parse.label);
      } else if (report) {
        ++report->rejected_per_reason[std::string(
            reject_reason_name(parse.reason))];
        report->rejected_tokens.push_back({note_id, comp, parse.reason});
      }
    }
    tokens.push_back(std::move(tok));
    i = tokens.back().end;
  }

  AnnotatedSentence out;
  out.note_id = note_id;

  // Pieces of prose between tokens; piece k precedes token k.
  std::vector<std::string_view> pieces;
  int prev_end = 0;
  for (const auto& tok : tokens) {
    pieces.emplace_back(sentence.data() + prev_end, tok.begin - prev_end);
    prev_end = tok.end;
  }
  pieces.emplace_back(sentence.data() + prev_end, n - prev_end);

  std::string cleaned;
  cleaned.reserve(sentence.size());
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::string_view p = pieces[k];
    const bool ws_junction =
        k > 0 && ((!pieces[k - 1].empty() && is_ascii_space(pieces[k - 1].back())) ||
                  (!p.empty() && is_ascii_space(p.front())));
    p = trim(p);
    if (k > 0 && ws_junction && !cleaned.empty() && !p.empty()) {
      cleaned.push_back(' ');
    }
    const int piece_start = static_cast<int>(cleaned.size());
    cleaned.append(p);
    const int piece_end = static_cast<int>(cleaned.size());

    if (k < tokens.size()) {
      if (piece_start == piece_end) {
        if (report) report->empty_span_drops += static_cast<int>(tokens[k].accepted.size());
        continue;
      }
      for (const Label& l : tokens[k].accepted) {
        out.annotations.push_back({piece_start, piece_end, l});
        if (report) ++report->accepted_per_label[l.name()];
      }
    }
  }

  out.text = std::move(cleaned);
  std::stable_sort(out.annotations.begin(), out.annotations.end(),
                   [](const SpanAnnotation& a, const SpanAnnotation& b) {
                     return a.start < b.start;
                   });
  return out;
}

std::pair<std::vector<AnnotatedSentence>, ParseReport> parse_note(
    const RawNote& raw, const Schema& schema) {
  ParseReport report;
  report.notes = 1;
  std::vector<AnnotatedSentence> sentences;
  std::optional<std::string> section;
  for (const Segment& seg : segment_note(raw.text)) {
    if (seg.is_section_header) {
      std::string tag = seg.text;
      if (!tag.empty() && tag.back() == ':') tag.pop_back();
      section = std::string(trim(tag));
      continue;
    }
    AnnotatedSentence s = extract_annotations(seg.text, schema, &report, raw.id);
    s.sentence_index = static_cast<int>(sentences.size());
    s.section_tag = section;
    if (s.text.empty()) continue;  // token-only segment
    sentences.push_back(std::move(s));
  }
  report.sentences = static_cast<int>(sentences.size());
  return {std::move(sentences), std::move(report)};
}

std::pair<Corpus, ParseReport> parse_notes(const std::vector<RawNote>& notes,
                                           const Schema& schema) {
  Corpus corpus;
  corpus.version = schema.version();
  ParseReport report;
  for (const RawNote& raw : notes) {
    auto [sentences, r] = parse_note(raw, schema);
    report.merge(r);
    for (auto& s : sentences) corpus.sentences.push_back(std::move(s));
  }
  return {std::move(corpus), std::move(report)};
}

}  // namespace dtd
