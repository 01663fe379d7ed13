// Copyright 2026 The bisol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BISOL_CLI_OUTPUT_HPP
#define BISOL_CLI_OUTPUT_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"

namespace bisol::cli {

using Json = nlohmann::ordered_json;

enum class Format { Tsv, Json };

/// Everything that determines a command's output. Printed ahead of every
/// result.
struct RunConfig {
  std::string command;
  std::optional<std::string> p;
  std::optional<int> q;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  int max_depth = 64;
  int precision = 16;
  std::optional<unsigned long> pmax;
  unsigned threads = 1;
  Format format = Format::Tsv;
  std::string out;
  Json extra = Json::object();

  Json to_json() const;
};

/// Writes config headers and results to stdout or to the --out file.
class Output {
 public:
  explicit Output(const RunConfig& config);
  ~Output();
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;

  /// A complete single-result document.
  void document(const Json& result);

  /// Streaming records: header once, then one record per call. In TSV mode
  /// the record keys of the first call become the column header.
  void begin_stream();
  void record(const Json& rec);
  /// A trailing summary after streamed records.
  void summary(const Json& s);

  std::ostream& stream() { return *os_; }

 private:
  void header();

  const RunConfig& config_;
  std::ostream* os_;
  std::unique_ptr<std::ostream> file_;
  bool columns_written_ = false;
};

/// Scalar rendering shared by the TSV writer.
std::string scalar_text(const Json& v);

}  // namespace bisol::cli

#endif  // BISOL_CLI_OUTPUT_HPP
