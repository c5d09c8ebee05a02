#include "dtd/rawnote.hpp"

#include <stdexcept>

namespace dtd {

std::string_view prompt_kind_name(PromptKind k) {
  switch (k) {
    case PromptKind::Standard: return "standard";
    case PromptKind::NegativeOnly: return "negative";
    case PromptKind::NoLabelSentences: return "no_label";
  }
  return "";
}

std::optional<PromptKind> prompt_kind_from_name(std::string_view s) {
  if (s == "standard") return PromptKind::Standard;
  if (s == "negative") return PromptKind::NegativeOnly;
  if (s == "no_label") return PromptKind::NoLabelSentences;
  return std::nullopt;
}

nlohmann::json RawNote::to_json() const {
  return {{"id", id},
          {"text", text},
          {"prompt_kind", prompt_kind_name(prompt_kind)},
          {"model_name", model_name},
          {"temperature", temperature},
          {"created_at", created_at}};
}

RawNote RawNote::from_json(const nlohmann::json& j) {
  RawNote n;
  n.id = j.at("id").get<std::string>();
  n.text = j.at("text").get<std::string>();
  const auto kind = prompt_kind_from_name(j.at("prompt_kind").get<std::string>());
  if (!kind) {
    throw std::runtime_error("unknown prompt_kind: " +
                             j.at("prompt_kind").get<std::string>());
  }
  n.prompt_kind = *kind;
  n.model_name = j.value("model_name", "");
  n.temperature = j.value("temperature", 1.2);
  n.created_at = j.value("created_at", "");
  return n;
}

}  // namespace dtd
