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

#include "gencqa/data.hpp"

#include <algorithm>

namespace gencqa {

void sort_clusters(std::vector<AnswerCluster>& clusters) {
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const AnswerCluster& a, const AnswerCluster& b) { return a.weight > b.weight; });
}

}  // namespace gencqa
