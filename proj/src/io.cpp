// Copyright 2026 The gencqa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gencqa/io.hpp"

#include <fstream>
#include <set>
#include <unordered_set>

#include "gencqa/error.hpp"
#include "gencqa/text.hpp"

namespace gencqa {
namespace {

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw DataError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw DataError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_string()) throw DataError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_array(const Json& v, const char* key) {
  if (!v.is_array()) throw DataError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_string()) throw DataError(std::string("field \"") + key + "\" must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

AnswerCluster cluster_from_json(const Json& c) {
  AnswerCluster cluster;
  if (!c.is_object()) throw DataError("cluster must be an object");
  if (auto it = c.find("label"); it != c.end() && !it->is_null()) {
    if (!it->is_string()) throw DataError("cluster label must be a string or null");
    cluster.label = it->get<std::string>();
  }
  const Json& count = require(c, "count");
  if (!count.is_number_integer()) throw DataError("cluster count must be an integer");
  cluster.weight = count.get<int>();
  if (cluster.weight < 1) throw DataError("cluster count must be >= 1");
  cluster.answers = string_array(require(c, "answers"), "answers");
  if (cluster.answers.empty()) throw DataError("cluster answers must be non-empty");
  std::set<std::string> seen;
  for (const auto& a : cluster.answers) {
    if (!seen.insert(normalized_key(a)).second) {
      throw DataError("duplicate normalized answer \"" + a + "\" inside one cluster");
    }
  }
  return cluster;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void for_each_record(const std::filesystem::path& path,
                     const std::function<void(const Json&, std::size_t)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::exception& e) {
      throw DataError(where(path, number) + ": malformed record: " + e.what());
    }
    try {
      fn(j, number);
    } catch (const DataError& e) {
      throw DataError(where(path, number) + ": " + e.what());
    } catch (const Json::exception& e) {
      throw DataError(where(path, number) + ": " + e.what());
    }
  }
}

std::vector<Json> read_records(const std::filesystem::path& path) {
  std::vector<Json> out;
  for_each_record(path, [&](const Json& j, std::size_t) { out.push_back(j); });
  return out;
}

void write_records(const std::filesystem::path& path, const std::vector<Json>& records) {
  auto out = open_for_write(path);
  for (const auto& r : records) out << r.dump() << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

DatasetRecord dataset_record_from_json(const Json& j) {
  DatasetRecord rec;
  rec.question.id = require_string(j, "id");
  rec.question.text = require_string(j, "question");
  if (rec.question.id.empty()) throw DataError("question id must be non-empty");
  if (trim(rec.question.text).empty()) throw DataError("question text must be non-empty");
  rec.truth.question_id = rec.question.id;
  if (auto it = j.find("clusters"); it != j.end()) {
    if (!it->is_array()) throw DataError("field \"clusters\" must be an array");
    for (const auto& c : *it) rec.truth.clusters.push_back(cluster_from_json(c));
  }
  sort_clusters(rec.truth.clusters);
  return rec;
}

Json to_json(const DatasetRecord& record) {
  Json clusters = Json::array();
  for (const auto& c : record.truth.clusters) {
    clusters.push_back({{"label", c.label ? Json(*c.label) : Json(nullptr)},
                        {"count", c.weight},
                        {"answers", c.answers}});
  }
  return {{"id", record.question.id}, {"question", record.question.text}, {"clusters", clusters}};
}

std::vector<DatasetRecord> load_dataset(const std::filesystem::path& path) {
  std::vector<DatasetRecord> out;
  std::unordered_set<std::string> ids;
  for_each_record(path, [&](const Json& j, std::size_t) {
    auto rec = dataset_record_from_json(j);
    if (!ids.insert(rec.question.id).second) {
      throw DataError("duplicate question id \"" + rec.question.id + "\"");
    }
    out.push_back(std::move(rec));
  });
  return out;
}

void write_dataset(const std::vector<DatasetRecord>& records, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  for (const auto& r : records) out << to_json(r).dump() << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

Json to_json(const Prediction& p) { return {{"id", p.question_id}, {"ranked_answers", p.ranked_answers}}; }

std::vector<Prediction> load_predictions(const std::filesystem::path& path) {
  std::vector<Prediction> out;
  std::unordered_set<std::string> ids;
  for_each_record(path, [&](const Json& j, std::size_t) {
    Prediction p;
    p.question_id = require_string(j, "id");
    if (p.question_id.empty()) throw DataError("prediction id must be non-empty");
    p.ranked_answers = string_array(require(j, "ranked_answers"), "ranked_answers");
    std::set<std::string> seen;
    for (const auto& a : p.ranked_answers) {
      if (!seen.insert(normalized_key(a)).second) {
        throw DataError("duplicate answer \"" + a + "\" in prediction " + p.question_id);
      }
    }
    if (!ids.insert(p.question_id).second) {
      throw DataError("duplicate prediction id \"" + p.question_id + "\"");
    }
    out.push_back(std::move(p));
  });
  return out;
}

void write_predictions(const std::vector<Prediction>& predictions, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  for (const auto& p : predictions) out << to_json(p).dump() << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace gencqa
