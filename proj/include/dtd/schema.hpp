#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dtd {

enum class FactorDomain { Patient, Illness, Treatment };
enum class Polarity { Positive, Negative };
enum class SchemaVersion { V1, V2 };

std::string_view domain_name(FactorDomain d);
std::string_view polarity_name(Polarity p);
std::optional<FactorDomain> domain_from_name(std::string_view s);
std::optional<Polarity> polarity_from_name(std::string_view s);
std::string_view version_name(SchemaVersion v);
std::optional<SchemaVersion> version_from_name(std::string_view s);

struct Factor {
  std::string name;  // snake_case
  FactorDomain domain;
};

// A classification target: (factor, polarity), a polarity-collapsed factor,
// or the no-annotation sentinel. Sentinel is the default-constructed state.
class Label {
 public:
  Label() = default;

  static Label sentinel() { return Label(); }
  static Label make(std::string factor, Polarity p) {
    Label l;
    l.factor_ = std::move(factor);
    l.polarity_ = p;
    return l;
  }
  static Label collapsed(std::string factor) {
    Label l;
    l.factor_ = std::move(factor);
    return l;
  }

  bool is_sentinel() const { return factor_.empty(); }
  bool is_collapsed() const { return !factor_.empty() && !polarity_; }
  const std::string& factor() const { return factor_; }
  std::optional<Polarity> polarity() const { return polarity_; }

  // "older_age_POSITIVE", "older_age" (collapsed), "NO_ANNOTATION".
  std::string name() const;
  static std::optional<Label> from_name(std::string_view name);

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::string factor_;
  std::optional<Polarity> polarity_;
};

enum class RejectReason {
  None,
  Malformed,       // bracket does not match the token grammar
  UnknownFactor,   // hallucinated factor name
  UnknownPolarity,
  DomainMismatch,  // factor exists but under a different domain prefix
};

std::string_view reject_reason_name(RejectReason r);

struct LabelParse {
  std::optional<Label> label;
  RejectReason reason = RejectReason::None;
  bool ok() const { return label.has_value(); }
};

class Schema {
 public:
  explicit Schema(SchemaVersion version);

  SchemaVersion version() const { return version_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const Factor* find_factor(std::string_view name) const;

  // Sentinel first, then POSITIVE labels in factor order, then NEGATIVE.
  const std::vector<Label>& label_space() const { return labels_; }
  // Sentinel first, then one collapsed label per factor.
  const std::vector<Label>& collapsed_label_space() const {
    return collapsed_labels_;
  }

  std::optional<int> index_of(const Label& l) const;
  std::optional<int> collapsed_index_of(const Label& l) const;
  bool contains(const Label& l) const { return index_of(l).has_value(); }

  // Inverse of label_token(): accepts "[PATIENT_FACTOR(POSITIVE):older_age]"
  // style tokens (outer brackets optional so compound-bracket components can
  // be fed through directly).
  LabelParse parse_label_token(std::string_view text) const;

  // Serializes a non-sentinel label back to its bracketed token form.
  std::string label_token(const Label& l) const;

  nlohmann::json to_json() const;

 private:
  SchemaVersion version_;
  std::vector<Factor> factors_;
  std::vector<Label> labels_;
  std::vector<Label> collapsed_labels_;
};

// v1 -> v2: older_age dropped, childhood_abuse folded into abuse, everything
// else identity. Returns nullopt for dropped labels.
std::optional<Label> migrate_label(const Label& l, SchemaVersion from,
                                   SchemaVersion to);

// Strips polarity; sentinel maps to itself.
Label collapse_polarity(const Label& l);

}  // namespace dtd
