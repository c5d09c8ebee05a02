#include "dtd/schema.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "dtd/util/text.hpp"

namespace dtd {

namespace {

constexpr FactorDomain P = FactorDomain::Patient;
constexpr FactorDomain I = FactorDomain::Illness;
constexpr FactorDomain T = FactorDomain::Treatment;

// The 20-factor schema. Domains follow the prompt grouping; the order fixes
// class indices across runs.
const std::array<Factor, 20>& v1_factors() {
  static const std::array<Factor, 20> f = {{
      {"older_age", P},
      {"family_member_mental_disorder", P},
      {"childhood_abuse", P},
      {"abuse", P},
      {"non_adherence", T},
      {"side_effects", T},
      {"recurrent_episodes", I},
      {"multiple_antidepressants", T},
      {"multiple_psychotherapies", T},
      {"physical_comorbidity", I},
      {"long_illness_duration", I},
      {"severe_illness", I},
      {"anhedonia", I},
      {"suicidality", I},
      {"antidepressant_dosage_increase", T},
      {"multiple_hospitalizations", I},
      {"mental_comorbidity", I},
      {"improvement", I},
      {"substance_abuse", I},
      {"illness_early_onset", I},
  }};
  return f;
}

}  // namespace

std::string_view domain_name(FactorDomain d) {
  switch (d) {
    case FactorDomain::Patient: return "PATIENT";
    case FactorDomain::Illness: return "ILLNESS";
    case FactorDomain::Treatment: return "TREATMENT";
  }
  return "";
}

std::string_view polarity_name(Polarity p) {
  return p == Polarity::Positive ? "POSITIVE" : "NEGATIVE";
}

std::optional<FactorDomain> domain_from_name(std::string_view s) {
  if (s == "PATIENT") return FactorDomain::Patient;
  if (s == "ILLNESS") return FactorDomain::Illness;
  if (s == "TREATMENT") return FactorDomain::Treatment;
  return std::nullopt;
}

std::optional<Polarity> polarity_from_name(std::string_view s) {
  if (s == "POSITIVE") return Polarity::Positive;
  if (s == "NEGATIVE") return Polarity::Negative;
  return std::nullopt;
}

std::string_view version_name(SchemaVersion v) {
  return v == SchemaVersion::V1 ? "v1" : "v2";
}

std::optional<SchemaVersion> version_from_name(std::string_view s) {
  if (s == "v1") return SchemaVersion::V1;
  if (s == "v2") return SchemaVersion::V2;
  return std::nullopt;
}

std::string Label::name() const {
  if (is_sentinel()) return "NO_ANNOTATION";
  if (!polarity_) return factor_;
  return factor_ + "_" + std::string(polarity_name(*polarity_));
}

std::optional<Label> Label::from_name(std::string_view name) {
  if (name.empty()) return std::nullopt;
  if (name == "NO_ANNOTATION") return Label::sentinel();
  if (name.ends_with("_POSITIVE")) {
    return Label::make(std::string(name.substr(0, name.size() - 9)),
                       Polarity::Positive);
  }
  if (name.ends_with("_NEGATIVE")) {
    return Label::make(std::string(name.substr(0, name.size() - 9)),
                       Polarity::Negative);
  }
  return Label::collapsed(std::string(name));
}

std::string_view reject_reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::Malformed: return "malformed";
    case RejectReason::UnknownFactor: return "unknown_factor";
    case RejectReason::UnknownPolarity: return "unknown_polarity";
    case RejectReason::DomainMismatch: return "domain_mismatch";
  }
  return "";
}

Schema::Schema(SchemaVersion version) : version_(version) {
  for (const Factor& f : v1_factors()) {
    if (version == SchemaVersion::V2 &&
        (f.name == "older_age" || f.name == "childhood_abuse")) {
      continue;
    }
    factors_.push_back(f);
  }
  labels_.push_back(Label::sentinel());
  for (const Factor& f : factors_) {
    labels_.push_back(Label::make(f.name, Polarity::Positive));
  }
  for (const Factor& f : factors_) {
    labels_.push_back(Label::make(f.name, Polarity::Negative));
  }
  collapsed_labels_.push_back(Label::sentinel());
  for (const Factor& f : factors_) {
    collapsed_labels_.push_back(Label::collapsed(f.name));
  }
}

const Factor* Schema::find_factor(std::string_view name) const {
  const auto it = std::find_if(factors_.begin(), factors_.end(),
                               [&](const Factor& f) { return f.name == name; });
  return it == factors_.end() ? nullptr : &*it;
}

std::optional<int> Schema::index_of(const Label& l) const {
  if (l.is_sentinel()) return 0;
  if (!l.polarity()) return std::nullopt;
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i] == l) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> Schema::collapsed_index_of(const Label& l) const {
  const Label c = collapse_polarity(l);
  for (std::size_t i = 0; i < collapsed_labels_.size(); ++i) {
    if (collapsed_labels_[i] == c) return static_cast<int>(i);
  }
  return std::nullopt;
}

LabelParse Schema::parse_label_token(std::string_view text) const {
  std::string_view t = trim(text);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
    t = trim(t.substr(1, t.size() - 2));
  }
  // Grammar: DOMAIN '_FACTOR' '(' POLARITY ')' ':' factor_name
  const std::size_t paren = t.find('(');
  const std::size_t close = t.find(')');
  const std::size_t colon = t.find(':');
  if (paren == std::string_view::npos || close == std::string_view::npos ||
      colon == std::string_view::npos || !(paren < close && close < colon)) {
    return {std::nullopt, RejectReason::Malformed};
  }
  const std::string_view head = trim(t.substr(0, paren));
  if (!head.ends_with("_FACTOR")) {
    return {std::nullopt, RejectReason::Malformed};
  }
  const auto domain = domain_from_name(head.substr(0, head.size() - 7));
  if (!domain) return {std::nullopt, RejectReason::Malformed};
  if (!trim(t.substr(close + 1, colon - close - 1)).empty()) {
    return {std::nullopt, RejectReason::Malformed};
  }
  const auto polarity =
      polarity_from_name(trim(t.substr(paren + 1, close - paren - 1)));
  if (!polarity) return {std::nullopt, RejectReason::UnknownPolarity};
  const std::string_view name = trim(t.substr(colon + 1));
  if (name.empty() ||
      !std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
      })) {
    return {std::nullopt, RejectReason::Malformed};
  }
  const Factor* f = find_factor(name);
  if (!f) return {std::nullopt, RejectReason::UnknownFactor};
  if (f->domain != *domain) return {std::nullopt, RejectReason::DomainMismatch};
  return {Label::make(f->name, *polarity), RejectReason::None};
}

std::string Schema::label_token(const Label& l) const {
  if (l.is_sentinel() || !l.polarity()) {
    throw std::invalid_argument("only polarized labels have a token form");
  }
  const Factor* f = find_factor(l.factor());
  if (!f) throw std::invalid_argument("label not in schema: " + l.name());
  std::string out = "[";
  out += domain_name(f->domain);
  out += "_FACTOR(";
  out += polarity_name(*l.polarity());
  out += "):";
  out += f->name;
  out += "]";
  return out;
}

nlohmann::json Schema::to_json() const {
  nlohmann::json factors = nlohmann::json::array();
  for (const Factor& f : factors_) {
    factors.push_back({{"name", f.name}, {"domain", domain_name(f.domain)}});
  }
  return {{"version", version_name(version_)}, {"factors", factors}};
}

std::optional<Label> migrate_label(const Label& l, SchemaVersion from,
                                   SchemaVersion to) {
  if (from == to) return l;
  if (from != SchemaVersion::V1 || to != SchemaVersion::V2) {
    throw std::invalid_argument("only v1 -> v2 migration is defined");
  }
  if (l.is_sentinel()) return l;
  if (l.factor() == "older_age") return std::nullopt;
  if (l.factor() == "childhood_abuse") {
    if (l.polarity()) return Label::make("abuse", *l.polarity());
    return Label::collapsed("abuse");
  }
  return l;
}

Label collapse_polarity(const Label& l) {
  if (l.is_sentinel()) return l;
  return Label::collapsed(l.factor());
}

}  // namespace dtd
