#include "dtd/corpus.hpp"

#include <stdexcept>

#include "dtd/util/jsonl.hpp"

namespace dtd {

nlohmann::json AnnotatedSentence::to_json() const {
  nlohmann::json anns = nlohmann::json::array();
  for (const auto& a : annotations) {
    anns.push_back({{"start", a.start}, {"end", a.end}, {"label", a.label.name()}});
  }
  nlohmann::json j = {{"note_id", note_id},
                      {"sentence_index", sentence_index},
                      {"text", text},
                      {"annotations", anns}};
  if (section_tag) j["section_tag"] = *section_tag;
  if (!provenance.empty()) {
    nlohmann::json p;
    if (!provenance.flags.empty()) p["flags"] = provenance.flags;
    if (provenance.duplicate_of) p["duplicate_of"] = *provenance.duplicate_of;
    if (provenance.noise_seed) p["noise_seed"] = *provenance.noise_seed;
    j["provenance"] = p;
  }
  return j;
}

AnnotatedSentence AnnotatedSentence::from_json(const nlohmann::json& j) {
  AnnotatedSentence s;
  s.note_id = j.at("note_id").get<std::string>();
  s.sentence_index = j.at("sentence_index").get<int>();
  s.text = j.at("text").get<std::string>();
  for (const auto& a : j.at("annotations")) {
    const auto label = Label::from_name(a.at("label").get<std::string>());
    if (!label) {
      throw std::runtime_error("bad label name in corpus: " +
                               a.at("label").get<std::string>());
    }
    s.annotations.push_back(
        {a.at("start").get<int>(), a.at("end").get<int>(), *label});
  }
  if (j.contains("section_tag")) s.section_tag = j["section_tag"].get<std::string>();
  if (j.contains("provenance")) {
    const auto& p = j["provenance"];
    if (p.contains("flags")) s.provenance.flags = p["flags"].get<std::vector<std::string>>();
    if (p.contains("duplicate_of")) s.provenance.duplicate_of = p["duplicate_of"].get<int>();
    if (p.contains("noise_seed")) s.provenance.noise_seed = p["noise_seed"].get<std::uint64_t>();
  }
  return s;
}

int Corpus::annotation_count() const {
  int n = 0;
  for (const auto& s : sentences) n += static_cast<int>(s.annotations.size());
  return n;
}

void write_corpus(const std::string& path, const Corpus& corpus,
                  const std::string& config_hash) {
  JsonlWriter w(path);
  nlohmann::json header = {{"type", "header"},
                           {"schema_version", version_name(corpus.version)}};
  if (!config_hash.empty()) header["config_hash"] = config_hash;
  w.write(header);
  for (const auto& s : corpus.sentences) w.write(s.to_json());
  w.close();
}

Corpus read_corpus(const std::string& path) {
  const auto rows = read_jsonl(path);
  if (rows.empty() || !rows.front().contains("schema_version")) {
    throw std::runtime_error(path + ": missing corpus header line");
  }
  Corpus corpus;
  const auto v =
      version_from_name(rows.front().at("schema_version").get<std::string>());
  if (!v) throw std::runtime_error(path + ": unknown schema version");
  corpus.version = *v;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    corpus.sentences.push_back(AnnotatedSentence::from_json(rows[i]));
  }
  return corpus;
}

}  // namespace dtd
