#include "dtd/util/jsonl.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dtd {

std::vector<json> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<json> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": invalid JSON line");
    }
    rows.push_back(std::move(j));
  }
  return rows;
}

void write_jsonl(const std::string& path, const std::vector<json>& rows) {
  JsonlWriter w(path);
  for (const auto& r : rows) w.write(r);
  w.close();
}

struct JsonlWriter::Impl {
  std::ofstream out;
};

JsonlWriter::JsonlWriter(const std::string& path) : impl_(new Impl) {
  const auto dir = std::filesystem::path(path).parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  impl_->out.open(path, std::ios::trunc);
  if (!impl_->out) {
    delete impl_;
    impl_ = nullptr;
    throw std::runtime_error("cannot open " + path + " for writing");
  }
}

JsonlWriter::~JsonlWriter() {
  close();
  delete impl_;
}

void JsonlWriter::write(const json& row) {
  impl_->out << row.dump() << '\n';
  impl_->out.flush();
  ++rows_;
}

void JsonlWriter::close() {
  if (impl_ && impl_->out.is_open()) impl_->out.close();
}

void write_text_file(const std::string& path, const std::string& content) {
  const auto dir = std::filesystem::path(path).parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dtd
