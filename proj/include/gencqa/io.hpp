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

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gencqa/data.hpp"

namespace gencqa {

using Json = nlohmann::json;

// Calls `fn(record, line_number)` for every non-blank line. Parse failures
// and exceptions thrown by `fn` surface as DataError naming path and line.
void for_each_record(const std::filesystem::path& path,
                     const std::function<void(const Json&, std::size_t)>& fn);

std::vector<Json> read_records(const std::filesystem::path& path);
void write_records(const std::filesystem::path& path, const std::vector<Json>& records);

// One record per line: {"id", "question", "clusters": [{"label", "count",
// "answers"}]}. Clusters come back sorted by weight. "clusters" may be
// omitted for question-only files.
std::vector<DatasetRecord> load_dataset(const std::filesystem::path& path);
void write_dataset(const std::vector<DatasetRecord>& records, const std::filesystem::path& path);

DatasetRecord dataset_record_from_json(const Json& j);
Json to_json(const DatasetRecord& record);

// One record per line: {"id", "ranked_answers"}.
std::vector<Prediction> load_predictions(const std::filesystem::path& path);
void write_predictions(const std::vector<Prediction>& predictions, const std::filesystem::path& path);

Json to_json(const Prediction& p);

std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace gencqa
