#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "dtd/fixturegen.hpp"
#include "dtd/parser.hpp"
#include "dtd/util/text.hpp"

using namespace dtd;

namespace {

const Schema& v1() {
  static const Schema s(SchemaVersion::V1);
  return s;
}

RawNote note_of(std::string text, std::string id = "n0") {
  RawNote n;
  n.id = std::move(id);
  n.text = std::move(text);
  n.model_name = "fixture";
  n.created_at = "1970-01-01T00:00:00Z";
  return n;
}

// Re-inserts serialized label tokens after each annotated span, grouping
// same-span labels back into one compound bracket.
std::string reinsert_tokens(const AnnotatedSentence& s, const Schema& schema) {
  std::map<int, std::vector<Label>> by_end;
  for (const auto& a : s.annotations) by_end[a.end].push_back(a.label);
  std::string out;
  int last = 0;
  for (const auto& [end, labels] : by_end) {
    out += s.text.substr(last, end - last);
    out += " [";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ", ";
      const std::string tok = schema.label_token(labels[i]);
      out += tok.substr(1, tok.size() - 2);
    }
    out += "]";
    last = end;
  }
  out += s.text.substr(last);
  return out;
}

}  // namespace

TEST_CASE("segment_sentences basics") {
  auto s = segment_sentences("A. B.");
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == "A.");
  CHECK(s[1].first == "B.");
  CHECK(s[0].second == 0);
  CHECK(s[1].second == 3);

  s = segment_sentences("He is 45 y.o. male. She left.");
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == "He is 45 y.o. male.");
  CHECK(s[1].first == "She left.");

  // Decimal points and lowercase continuations never split.
  s = segment_sentences("Dose was 3.5 mg daily. it helped somewhat");
  REQUIRE(s.size() == 1);

  // Terminators inside a bracketed token never split.
  s = segment_sentences("Text [WEIRD. TOKEN? x] more. Done.");
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == "Text [WEIRD. TOKEN? x] more.");

  // Pathological input yields a single sentence.
  s = segment_sentences("no terminators at all");
  REQUIRE(s.size() == 1);
}

TEST_CASE("segment_note reconstruction and headers") {
  const std::string& note = appendix_a_note();
  const auto segments = segment_note(note);

  // Every segment is the literal substring at its offset.
  std::vector<bool> covered(note.size(), false);
  for (const auto& seg : segments) {
    CHECK(note.substr(seg.offset, seg.text.size()) == seg.text);
    for (std::size_t i = 0; i < seg.text.size(); ++i) {
      covered[seg.offset + i] = true;
    }
  }
  // Gaps between segments hold only whitespace.
  for (std::size_t i = 0; i < note.size(); ++i) {
    if (!covered[i]) CHECK(is_ascii_space(note[i]));
  }

  int headers = 0;
  for (const auto& seg : segments) headers += seg.is_section_header;
  CHECK(headers == 5);
}

TEST_CASE("appendix A patient presentation paragraph has 3 sentences") {
  const std::string& note = appendix_a_note();
  const auto para_end = note.find("\n\n");
  REQUIRE(para_end != std::string::npos);
  const auto sentences = segment_sentences(note.substr(0, para_end));
  CHECK(sentences.size() == 3);
}

TEST_CASE("extract_annotations prefix heuristic") {
  ParseReport report;

  SUBCASE("each label takes the text since the previous label") {
    const auto s = extract_annotations(
        "XXXXX [ILLNESS_FACTOR(POSITIVE):anhedonia] YYYYY "
        "[ILLNESS_FACTOR(NEGATIVE):improvement]",
        v1(), &report);
    CHECK(s.text == "XXXXX YYYYY");
    REQUIRE(s.annotations.size() == 2);
    CHECK(s.annotations[0] ==
          SpanAnnotation{0, 5, Label::make("anhedonia", Polarity::Positive)});
    CHECK(s.annotations[1] ==
          SpanAnnotation{6, 11, Label::make("improvement", Polarity::Negative)});
  }

  SUBCASE("worked first sentence of the bundled note") {
    const auto s = extract_annotations(
        "The patient is a 45-year old female "
        "[PATIENT_FACTOR(POSITIVE):older_age] who presents with further text.",
        v1(), &report);
    CHECK(s.text ==
          "The patient is a 45-year old female who presents with further text.");
    REQUIRE(s.annotations.size() == 1);
    CHECK(s.annotations[0].start == 0);
    CHECK(s.annotations[0].end == 35);
    CHECK(s.text.substr(0, 35) == "The patient is a 45-year old female");
  }

  SUBCASE("no tokens leaves the sentence unannotated") {
    const auto s = extract_annotations("Plain prose sentence.", v1(), &report);
    CHECK(s.text == "Plain prose sentence.");
    CHECK(s.annotations.empty());
  }

  SUBCASE("rejected tokens delimit and are deleted without annotating") {
    const auto s = extract_annotations(
        "AAA [ILLNESS_FACTOR(POSITIVE):made_up] BBB "
        "[ILLNESS_FACTOR(POSITIVE):anhedonia]",
        v1(), &report);
    CHECK(s.text == "AAA BBB");
    REQUIRE(s.annotations.size() == 1);
    CHECK(s.annotations[0].start == 4);
    CHECK(s.annotations[0].end == 7);
    CHECK(report.rejected_per_reason.at("unknown_factor") == 1);
  }

  SUBCASE("sentence with only rejected tokens becomes unannotated") {
    const auto s =
        extract_annotations("Some text [not_a_label] here.", v1(), &report);
    CHECK(s.annotations.empty());
    CHECK(s.text == "Some text here.");
  }

  SUBCASE("compound bracket fans out over one span") {
    const auto s = extract_annotations(
        "Course was severe [ILLNESS_FACTOR(POSITIVE):severe_illness, "
        "ILLNESS_FACTOR(POSITIVE):recurrent_episodes].",
        v1(), &report);
    REQUIRE(s.annotations.size() == 2);
    CHECK(s.annotations[0].start == s.annotations[1].start);
    CHECK(s.annotations[0].end == s.annotations[1].end);
    CHECK(s.text == "Course was severe .");
  }

  SUBCASE("leading token has an empty span and is dropped") {
    ParseReport r;
    const auto s = extract_annotations(
        "[ILLNESS_FACTOR(POSITIVE):anhedonia] trailing text only.", v1(), &r);
    CHECK(s.annotations.empty());
    CHECK(r.empty_span_drops == 1);
    CHECK(r.accepted_total() == 0);
    CHECK(s.text == "trailing text only.");
  }
}

TEST_CASE("parse_note on the bundled appendix note matches the frozen list") {
  struct Expected {
    int sentence;
    int start;
    int end;
    const char* label;
  };
  // Derived with an independent implementation of the prefix heuristic and
  // cross-checked by hand (first span equals the documented (0, 35) example).
  static const Expected expected[] = {
      {0, 0, 35, "older_age_POSITIVE"},
      {0, 36, 144, "family_member_mental_disorder_POSITIVE"},
      {1, 0, 84, "childhood_abuse_POSITIVE"},
      {2, 0, 103, "childhood_abuse_POSITIVE"},
      {4, 0, 22, "long_illness_duration_POSITIVE"},
      {4, 23, 122, "suicidality_POSITIVE"},
      {5, 0, 68, "multiple_hospitalizations_NEGATIVE"},
      {6, 0, 58, "recurrent_episodes_POSITIVE"},
      {8, 0, 74, "multiple_antidepressants_POSITIVE"},
      {8, 75, 122, "antidepressant_dosage_increase_POSITIVE"},
      {9, 0, 137, "side_effects_POSITIVE"},
      {10, 0, 61, "multiple_psychotherapies_POSITIVE"},
      {13, 0, 40, "anhedonia_POSITIVE"},
      {14, 0, 109, "physical_comorbidity_POSITIVE"},
      {15, 0, 74, "mental_comorbidity_POSITIVE"},
      {16, 0, 46, "substance_abuse_NEGATIVE"},
      {17, 0, 61, "illness_early_onset_POSITIVE"},
      {18, 0, 151, "severe_illness_POSITIVE"},
      {18, 0, 151, "recurrent_episodes_POSITIVE"},
  };

  const auto [sentences, report] =
      parse_note(note_of(appendix_a_note(), "appendix_a"), v1());

  REQUIRE(sentences.size() == 24);
  CHECK(report.sentences == 24);
  CHECK(report.notes == 1);

  std::vector<Expected> actual;
  for (const auto& s : sentences) {
    for (const auto& a : s.annotations) {
      actual.push_back({s.sentence_index, a.start, a.end, ""});
    }
  }
  REQUIRE(actual.size() == std::size(expected));
  std::size_t k = 0;
  for (const auto& s : sentences) {
    for (const auto& a : s.annotations) {
      CHECK(s.sentence_index == expected[k].sentence);
      CHECK(a.start == expected[k].start);
      CHECK(a.end == expected[k].end);
      CHECK(a.label.name() == expected[k].label);
      ++k;
    }
  }

  // One domain-mismatched component in the compound plan bracket.
  CHECK(report.accepted_total() == 19);
  CHECK(report.rejected_total() == 1);
  CHECK(report.rejected_per_reason.at("domain_mismatch") == 1);
  CHECK(report.rejected_tokens.at(0).note_id == "appendix_a");

  // Section tags follow the headers.
  CHECK(sentences[0].section_tag == "Patient presentation");
  CHECK(sentences[5].section_tag == "Illness history");
  CHECK(sentences[10].section_tag == "Treatment history");
  CHECK(sentences[16].section_tag == "Current presentation");
  CHECK(sentences[23].section_tag == "Discussion and plan");

  // Stability: a second parse is identical.
  const auto second = parse_note(note_of(appendix_a_note(), "appendix_a"), v1());
  REQUIRE(second.first.size() == sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    CHECK(second.first[i].text == sentences[i].text);
    CHECK(second.first[i].annotations == sentences[i].annotations);
  }
}

TEST_CASE("parse invariants hold on the bundled note") {
  const auto [sentences, report] =
      parse_note(note_of(appendix_a_note(), "appendix_a"), v1());

  int emitted = 0;
  for (const auto& s : sentences) {
    // No bracket characters survive cleaning.
    CHECK(s.text.find('[') == std::string::npos);
    CHECK(s.text.find(']') == std::string::npos);
    for (std::size_t i = 0; i < s.annotations.size(); ++i) {
      const auto& a = s.annotations[i];
      ++emitted;
      REQUIRE(a.start < a.end);
      REQUIRE(a.end <= static_cast<int>(s.text.size()));
      const std::string span = s.text.substr(a.start, a.end - a.start);
      CHECK(!std::string(trim(span)).empty());
      CHECK(span == std::string(trim(span)));
      // Spans are identical (compound bracket) or disjoint, never partial.
      if (i > 0) {
        const auto& p = s.annotations[i - 1];
        const bool identical = p.start == a.start && p.end == a.end;
        const bool disjoint = p.end <= a.start;
        CHECK((identical || disjoint));
      }
    }
  }
  CHECK(report.accepted_total() == emitted);
}

TEST_CASE("reparse fixpoint: reinserting tokens reproduces annotations") {
  const auto [sentences, report] =
      parse_note(note_of(appendix_a_note(), "appendix_a"), v1());
  for (const auto& s : sentences) {
    if (s.annotations.empty()) continue;
    ParseReport r;
    const auto again = extract_annotations(reinsert_tokens(s, v1()), v1(), &r);
    CHECK(again.text == s.text);
    CHECK(again.annotations == s.annotations);
    CHECK(r.rejected_total() == 0);
  }
}

TEST_CASE("parse report merge is associative over notes") {
  const auto pure = note_of("Just prose. Nothing else.", "p");
  const auto ann = note_of(
      "He denies suicidal thoughts [ILLNESS_FACTOR(NEGATIVE):suicidality].",
      "a");
  auto [corpus, merged] = parse_notes({pure, ann}, v1());
  CHECK(corpus.sentences.size() == 3);
  CHECK(merged.notes == 2);
  CHECK(merged.sentences == 3);
  CHECK(merged.accepted_total() == 1);

  // Pure prose note: all sentences unannotated.
  for (const auto& s : corpus.sentences) {
    if (s.note_id == "p") CHECK(s.annotations.empty());
  }
}
