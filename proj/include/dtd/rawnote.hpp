#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace dtd {

enum class PromptKind { Standard, NegativeOnly, NoLabelSentences };

std::string_view prompt_kind_name(PromptKind k);
std::optional<PromptKind> prompt_kind_from_name(std::string_view s);

// One generation result: a full inline-annotated note, or a single sentence
// for the no-label prompt. Provenance fields are always populated.
struct RawNote {
  std::string id;
  std::string text;
  PromptKind prompt_kind = PromptKind::Standard;
  std::string model_name;
  double temperature = 1.2;
  std::string created_at;  // ISO-8601; fixture rows carry a fixed stamp

  nlohmann::json to_json() const;
  static RawNote from_json(const nlohmann::json& j);
};

}  // namespace dtd
