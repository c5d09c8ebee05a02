#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtd/rawnote.hpp"

namespace dtd {

// The worked example note shipped with the repo; served by the fixture
// provider under id "appendix_a".
const std::string& appendix_a_note();

struct FixtureSpec {
  int standard_notes = 60;
  int negative_notes = 30;
  int no_label_sentences = 600;
  std::uint64_t seed = 20240117;
  // Fraction of factor sentences that avoid their label words; drives the
  // diverse-span statistics downstream.
  double diverse_fraction = 0.35;
  // Small error rates so parser rejection paths see realistic traffic.
  double hallucination_rate = 0.01;
  double malformed_rate = 0.005;
  bool include_appendix_a = true;
  // Inflate one factor and starve another; used by class-weight experiments.
  bool skewed = false;
};

// Deterministic synthetic corpus in the style of the generation prompts:
// narrative notes with inline label tokens, section headers, compound
// brackets, and occasional drift. Same spec -> byte-identical notes.
std::vector<RawNote> generate_fixture_notes(const FixtureSpec& spec);
std::vector<RawNote> generate_no_label_fixtures(const FixtureSpec& spec);

}  // namespace dtd
