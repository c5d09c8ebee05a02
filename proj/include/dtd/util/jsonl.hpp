#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dtd {

using json = nlohmann::json;

// Reads a JSONL file, one object per line. Blank lines are skipped.
// Throws std::runtime_error naming file and line on parse failure.
std::vector<json> read_jsonl(const std::string& path);

void write_jsonl(const std::string& path, const std::vector<json>& rows);

// Streaming writer that flushes after every row so partial results survive
// an abort.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path);
  ~JsonlWriter();
  JsonlWriter(const JsonlWriter&) = delete;
  JsonlWriter& operator=(const JsonlWriter&) = delete;

  void write(const json& row);
  void close();
  int rows_written() const { return rows_; }

 private:
  struct Impl;
  Impl* impl_;
  int rows_ = 0;
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace dtd
