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

#include "output.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace bisol::cli {

Json RunConfig::to_json() const {
  Json j;
  j["command"] = command;
  j["version"] = BISOL_VERSION;
  if (p) j["p"] = *p;
  if (q) j["q"] = *q;
  if (samples) j["samples"] = *samples;
  j["seed"] = seed;
  j["max_depth"] = max_depth;
  j["precision"] = precision;
  if (pmax) j["pmax"] = *pmax;
  j["threads"] = threads;
  j["format"] = format == Format::Json ? "json" : "tsv";
  j["out"] = out.empty() ? "-" : out;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return s;
  }
  return v.dump();
}

namespace {

bool is_table(const Json& v) { return v.is_array() && !v.empty() && v[0].is_object(); }

void write_tsv(std::ostream& os, const Json& v, const std::string& prefix) {
  for (const auto& [k, x] : v.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (x.is_object()) {
      write_tsv(os, x, key);
    } else if (is_table(x)) {
      os << "\n# table " << key << "\n";
      bool first = true;
      for (const auto& [col, _] : x[0].items()) {
        os << (first ? "" : "\t") << col;
        first = false;
      }
      os << "\n";
      for (const auto& row : x) {
        first = true;
        for (const auto& [_, cell] : row.items()) {
          os << (first ? "" : "\t") << scalar_text(cell);
          first = false;
        }
        os << "\n";
      }
    } else {
      os << key << "\t" << scalar_text(x) << "\n";
    }
  }
}

}  // namespace

Output::Output(const RunConfig& config) : config_(config), os_(&std::cout) {
  if (!config.out.empty() && config.out != "-") {
    file_ = std::make_unique<std::ofstream>(config.out);
    if (!*file_) throw std::runtime_error("cannot open output file " + config.out);
    os_ = file_.get();
  }
}

Output::~Output() { os_->flush(); }

void Output::header() {
  if (config_.format == Format::Json) return;
  const Json config = config_.to_json();
  for (const auto& [k, v] : config.items()) *os_ << "# " << k << "\t" << scalar_text(v) << "\n";
}

void Output::document(const Json& result) {
  if (config_.format == Format::Json) {
    Json doc;
    doc["config"] = config_.to_json();
    doc["result"] = result;
    *os_ << doc.dump(2) << "\n";
  } else {
    header();
    write_tsv(*os_, result, "");
  }
}

void Output::begin_stream() {
  if (config_.format == Format::Json)
    *os_ << Json{{"config", config_.to_json()}}.dump() << "\n";
  else
    header();
}

void Output::record(const Json& rec) {
  if (config_.format == Format::Json) {
    *os_ << rec.dump() << "\n";
    return;
  }
  if (!columns_written_) {
    bool first = true;
    for (const auto& [k, _] : rec.items()) {
      *os_ << (first ? "" : "\t") << k;
      first = false;
    }
    *os_ << "\n";
    columns_written_ = true;
  }
  bool first = true;
  for (const auto& [_, v] : rec.items()) {
    *os_ << (first ? "" : "\t") << scalar_text(v);
    first = false;
  }
  *os_ << "\n";
  os_->flush();
}

void Output::summary(const Json& s) {
  if (config_.format == Format::Json) {
    *os_ << Json{{"summary", s}}.dump() << "\n";
  } else {
    *os_ << "\n# summary\n";
    write_tsv(*os_, s, "");
  }
}

}  // namespace bisol::cli
