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

#include <optional>
#include <string>
#include <vector>

namespace gencqa {

struct Question {
  std::string id;
  std::string text;

  friend bool operator==(const Question&, const Question&) = default;
};

// One ground-truth answer class with its crowd vote count.
struct AnswerCluster {
  std::optional<std::string> label;
  int weight = 1;
  std::vector<std::string> answers;

  friend bool operator==(const AnswerCluster&, const AnswerCluster&) = default;
};

// Clusters are kept sorted by weight descending, file order among ties.
struct GroundTruthClusters {
  std::string question_id;
  std::vector<AnswerCluster> clusters;

  friend bool operator==(const GroundTruthClusters&, const GroundTruthClusters&) = default;
};

struct DatasetRecord {
  Question question;
  GroundTruthClusters truth;

  friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

struct Prediction {
  std::string question_id;
  std::vector<std::string> ranked_answers;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// Stable sort by weight descending.
void sort_clusters(std::vector<AnswerCluster>& clusters);

}  // namespace gencqa
