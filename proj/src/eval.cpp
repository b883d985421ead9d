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

#include "gencqa/eval.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "gencqa/dedup.hpp"
#include "gencqa/error.hpp"

namespace gencqa {

MatchPolicy MatchPolicy::exact(StopWordList stop) {
  MatchPolicy p;
  p.stop_words = std::move(stop);
  return p;
}

MatchPolicy MatchPolicy::synonyms(SynonymLexicon lexicon, StopWordList stop) {
  MatchPolicy p;
  p.mode = MatchMode::kSynonymAugmented;
  p.lexicon = std::move(lexicon);
  p.stop_words = std::move(stop);
  return p;
}

std::string MatchPolicy::mode_name() const {
  return mode == MatchMode::kExactNormalized ? "exact-normalized" : "synonym-augmented";
}

namespace {

NormalForm policy_form(const std::string& text, const MatchPolicy& policy) {
  if (policy.mode == MatchMode::kSynonymAugmented) {
    if (!policy.lexicon) throw ConfigError("synonym-augmented matching requires a lexicon");
    return normal_form(text, policy.stop_words, *policy.lexicon);
  }
  static const SynonymLexicon kEmpty;
  return normal_form(text, policy.stop_words, kEmpty);
}

}  // namespace

std::optional<std::size_t> match_answer(const std::string& answer, const GroundTruthClusters& clusters,
                                        const MatchPolicy& policy) {
  const NormalForm nf = policy_form(answer, policy);
  if (nf.empty()) return std::nullopt;
  for (std::size_t j = 0; j < clusters.clusters.size(); ++j) {
    for (const auto& gold : clusters.clusters[j].answers) {
      if (policy_form(gold, policy) == nf) return j;
    }
  }
  return std::nullopt;
}

std::string TruncationScheme::name() const {
  return (kind == TruncationKind::kAnsAtK ? "Ans@" : "Inc@") + std::to_string(k);
}

std::vector<TruncationScheme> standard_schemes() {
  using enum TruncationKind;
  return {{kAnsAtK, 1}, {kAnsAtK, 3}, {kAnsAtK, 5}, {kAnsAtK, 10}, {kIncAtK, 1}, {kIncAtK, 3}, {kIncAtK, 5}};
}

TruncationScheme parse_scheme(const std::string& name) {
  TruncationScheme s;
  if (name.rfind("Ans@", 0) == 0) {
    s.kind = TruncationKind::kAnsAtK;
  } else if (name.rfind("Inc@", 0) == 0) {
    s.kind = TruncationKind::kIncAtK;
  } else {
    throw ConfigError("unknown truncation scheme \"" + name + "\"");
  }
  try {
    std::size_t used = 0;
    s.k = std::stoi(name.substr(4), &used);
    if (used != name.size() - 4) throw ConfigError("");
  } catch (const std::exception&) {
    throw ConfigError("unknown truncation scheme \"" + name + "\"");
  }
  if (s.k < 1) throw ConfigError("truncation k must be >= 1");
  return s;
}

std::vector<std::string> truncate(const std::vector<std::string>& ranked, const GroundTruthClusters& clusters,
                                  const TruncationScheme& scheme, const MatchPolicy& policy) {
  if (scheme.k < 1) throw ConfigError("truncation k must be >= 1");
  if (scheme.kind == TruncationKind::kAnsAtK) {
    const auto n = std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(scheme.k));
    return {ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  std::vector<std::string> out;
  int wrong = 0;
  for (const auto& a : ranked) {
    if (!match_answer(a, clusters, policy)) {
      if (++wrong == scheme.k) break;
    }
    out.push_back(a);
  }
  return out;
}

double weighted_accuracy(const std::vector<std::string>& truncated, const GroundTruthClusters& clusters,
                         const MatchPolicy& policy) {
  if (truncated.empty()) return 0.0;
  std::vector<bool> credited(clusters.clusters.size(), false);
  double earned = 0.0;
  for (const auto& a : truncated) {
    if (auto j = match_answer(a, clusters, policy); j && !credited[*j]) {
      credited[*j] = true;
      earned += clusters.clusters[*j].weight;
    }
  }
  std::vector<int> weights;
  for (const auto& c : clusters.clusters) weights.push_back(c.weight);
  std::sort(weights.begin(), weights.end(), std::greater<>());
  double ideal = 0.0;
  for (std::size_t i = 0; i < truncated.size() && i < weights.size(); ++i) ideal += weights[i];
  return ideal > 0.0 ? earned / ideal : 0.0;
}

EvalReport evaluate(const std::vector<Prediction>& predictions, const std::vector<GroundTruthClusters>& ground,
                    const std::vector<TruncationScheme>& schemes, const MatchPolicy& policy) {
  std::unordered_map<std::string, const GroundTruthClusters*> by_id;
  for (const auto& g : ground) by_id.emplace(g.question_id, &g);
  std::vector<std::string> missing;
  for (const auto& p : predictions) {
    if (by_id.count(p.question_id) == 0) missing.push_back(p.question_id);
  }
  if (!missing.empty()) {
    std::string ids;
    for (const auto& id : missing) ids += (ids.empty() ? "" : ", ") + id;
    throw DataError("predictions without ground truth: " + ids);
  }

  EvalReport report;
  report.policy = policy.mode_name();
  for (const auto& s : schemes) {
    report.metrics.push_back(s.name());
    report.per_metric[s.name()] = 0.0;
  }
  for (const auto& p : predictions) {
    const auto& truth = *by_id.at(p.question_id);
    std::map<std::string, double> scores;
    for (const auto& s : schemes) {
      scores[s.name()] = weighted_accuracy(truncate(p.ranked_answers, truth, s, policy), truth, policy);
    }
    report.per_question.emplace_back(p.question_id, std::move(scores));
  }
  if (!predictions.empty()) {
    for (const auto& name : report.metrics) {
      double total = 0.0;
      for (const auto& [_, scores] : report.per_question) total += scores.at(name);
      report.per_metric[name] = total / static_cast<double>(predictions.size());
    }
  }
  return report;
}

double keyword_macro_accuracy(const std::vector<KeywordList>& extracted,
                              const std::vector<std::vector<std::string>>& gold, int m) {
  if (m < 1) throw ConfigError("keyword accuracy m must be >= 1");
  if (extracted.size() != gold.size()) {
    throw DataError("keyword accuracy: " + std::to_string(extracted.size()) + " extracted lists vs " +
                    std::to_string(gold.size()) + " gold lists");
  }
  if (extracted.empty()) return 0.0;
  double total = 0.0;
  std::size_t counted = 0;
  for (std::size_t i = 0; i < extracted.size(); ++i) {
    const std::set<std::string> g(gold[i].begin(), gold[i].end());
    const auto denom = std::min<std::size_t>(static_cast<std::size_t>(m), g.size());
    ++counted;
    if (denom == 0) continue;
    std::size_t hits = 0;
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(m), extracted[i].keywords.size());
    for (std::size_t k = 0; k < take; ++k) hits += g.count(extracted[i].keywords[k].token);
    total += static_cast<double>(hits) / static_cast<double>(denom);
  }
  return total / static_cast<double>(counted);
}

}  // namespace gencqa
