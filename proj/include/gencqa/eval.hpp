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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gencqa/data.hpp"
#include "gencqa/keywords.hpp"
#include "gencqa/lexicon.hpp"

namespace gencqa {

enum class MatchMode { kExactNormalized, kSynonymAugmented };

// kExactNormalized compares content-lemma sets; kSynonymAugmented compares
// NormalForms (synonym-class sets) under `lexicon`.
struct MatchPolicy {
  MatchMode mode = MatchMode::kExactNormalized;
  std::optional<SynonymLexicon> lexicon;
  StopWordList stop_words = StopWordList::english();

  static MatchPolicy exact(StopWordList stop = StopWordList::english());
  static MatchPolicy synonyms(SynonymLexicon lexicon, StopWordList stop = StopWordList::english());

  std::string mode_name() const;
};

// Index of the first cluster (in weight order) containing a matching gold
// answer, if any.
std::optional<std::size_t> match_answer(const std::string& answer, const GroundTruthClusters& clusters,
                                        const MatchPolicy& policy);

enum class TruncationKind { kAnsAtK, kIncAtK };

struct TruncationScheme {
  TruncationKind kind = TruncationKind::kAnsAtK;
  int k = 1;

  std::string name() const;  // "Ans@3", "Inc@1", ...
  friend bool operator==(const TruncationScheme&, const TruncationScheme&) = default;
};

// Ans@{1,3,5,10} and Inc@{1,3,5}.
std::vector<TruncationScheme> standard_schemes();
inline constexpr const char* kPrimaryMetric = "Inc@3";

TruncationScheme parse_scheme(const std::string& name);

// Ans@k keeps the first k answers; Inc@k stops just before the k-th
// non-matching answer.
std::vector<std::string> truncate(const std::vector<std::string>& ranked, const GroundTruthClusters& clusters,
                                  const TruncationScheme& scheme, const MatchPolicy& policy);

// Earned cluster weight (each cluster credited once, at its first match)
// over the sum of the len heaviest cluster weights, padding with zero past
// the last cluster.
double weighted_accuracy(const std::vector<std::string>& truncated, const GroundTruthClusters& clusters,
                         const MatchPolicy& policy);

struct EvalReport {
  std::string policy;
  std::vector<std::string> metrics;                                  // scheme names in suite order
  std::map<std::string, double> per_metric;                          // mean over questions
  std::vector<std::pair<std::string, std::map<std::string, double>>> per_question;  // prediction order
};

EvalReport evaluate(const std::vector<Prediction>& predictions, const std::vector<GroundTruthClusters>& ground,
                    const std::vector<TruncationScheme>& schemes, const MatchPolicy& policy);

// Mean over questions of |top-m extracted ∩ gold| / min(m, |gold|).
double keyword_macro_accuracy(const std::vector<KeywordList>& extracted,
                              const std::vector<std::vector<std::string>>& gold, int m);

}  // namespace gencqa
