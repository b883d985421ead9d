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

#include <doctest.h>

#include "gencqa/error.hpp"
#include "gencqa/eval.hpp"
#include "gencqa/io.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gencqa;

namespace {

GroundTruthClusters table() {
  const auto data = load_dataset(fixture("athlete_clusters.jsonl"));
  return data.at(0).truth;
}

double wacc(const std::vector<std::string>& answers, const GroundTruthClusters& g, const MatchPolicy& p) {
  return weighted_accuracy(answers, g, p);
}

TruncationScheme inc(int k) { return {TruncationKind::kIncAtK, k}; }
TruncationScheme ans(int k) { return {TruncationKind::kAnsAtK, k}; }

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("clusters load heaviest first") {
  const auto g = table();
  REQUIRE(g.clusters.size() == 4);
  CHECK(g.clusters[0].weight == 36);
  CHECK(g.clusters[1].label == "unhealthy drinks");
  CHECK(g.clusters[2].label == "clothing/shoes");
  CHECK(g.clusters[3].weight == 7);
}

TEST_CASE("answer matching") {
  const auto g = table();
  const auto exact = MatchPolicy::exact();
  const auto syn = MatchPolicy::synonyms(SynonymLexicon::load(fixture("lexicon.txt")));
  CHECK(match_answer("junk food", g, exact) == 0);
  CHECK(match_answer("Junk-Food!", g, exact) == 0);
  CHECK(match_answer("spaceship", g, exact) == std::nullopt);
  CHECK(match_answer("cokes", g, exact) == 1);
  CHECK(match_answer("soda", g, exact) == std::nullopt);
  CHECK(match_answer("soda", g, syn) == 1);
  CHECK(match_answer("the", g, exact) == std::nullopt);
  CHECK(match_answer("shoes", g, exact) == 2);
  MatchPolicy broken;
  broken.mode = MatchMode::kSynonymAugmented;
  CHECK_THROWS_AS(match_answer("x", g, broken), ConfigError);
}

TEST_CASE("truncation") {
  const auto g = table();
  const auto p = MatchPolicy::exact();
  const Strings ranked = {"junk food", "chocolate", "beer", "gloves", "pizza", "coke"};
  CHECK(truncate(ranked, g, ans(1), p) == Strings{"junk food"});
  CHECK(truncate(ranked, g, ans(10), p) == ranked);
  CHECK(truncate(ranked, g, inc(1), p) == Strings{"junk food", "chocolate"});
  CHECK(truncate(ranked, g, inc(2), p) == Strings{"junk food", "chocolate", "beer", "gloves"});
  CHECK(truncate(ranked, g, inc(3), p) == ranked);
  CHECK(truncate({"beer"}, g, inc(1), p).empty());
  CHECK_THROWS_AS(truncate(ranked, g, ans(0), p), ConfigError);
}

TEST_CASE("weighted accuracy") {
  const auto g = table();
  const auto p = MatchPolicy::exact();
  CHECK(wacc({"medal", "coke", "pizza"}, g, p) == doctest::Approx(31.0 / 84.0).epsilon(1e-12));
  CHECK(wacc({"junk food"}, g, p) == 1.0);
  CHECK(wacc({"junk food", "chocolate"}, g, p) == doctest::Approx(36.0 / 60.0));
  CHECK(wacc({}, g, p) == 0.0);
  CHECK(wacc({"pizza"}, g, p) == 0.0);
  // padding past the last cluster
  CHECK(wacc({"junk food", "chocolate", "beer", "gloves", "pizza", "coke"}, g, p) ==
        doctest::Approx(84.0 / 91.0).epsilon(1e-12));
  // perfect cover of every cluster
  CHECK(wacc({"chocolate", "coke", "shoe", "medal"}, g, p) == 1.0);
}

TEST_CASE("weighted accuracy agrees with the matrix oracle") {
  const auto g = table();
  const auto p = MatchPolicy::exact();
  std::vector<oracle::OracleCluster> oc;
  for (const auto& c : g.clusters) oc.push_back({c.weight, c.answers});
  const Strings vocab = {"chocolate", "junk food", "coke", "alcohol", "gloves", "clothes", "shoe",
                         "handbag",   "medal",     "tennis", "pizza", "beer",   "rocks"};
  for (std::size_t a = 0; a < vocab.size(); ++a) {
    for (std::size_t b = 0; b < vocab.size(); ++b) {
      for (std::size_t c = 0; c < vocab.size(); c += 3) {
        const Strings list = {vocab[a], vocab[b], vocab[c]};
        CHECK(wacc(list, g, p) == doctest::Approx(oracle::weighted_accuracy(list, oc)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("evaluation report") {
  const auto g = table();
  const auto p = MatchPolicy::exact();
  const GroundTruthClusters other{"b", {{std::nullopt, 5, {"cat"}}, {std::nullopt, 3, {"dog"}}}};
  const std::vector<GroundTruthClusters> ground = {g, other};

  const auto perfect = evaluate({{"athlete", {"chocolate", "coke", "shoe", "medal"}}, {"b", {"cat", "dog"}}}, ground,
                                standard_schemes(), p);
  CHECK(perfect.metrics.size() == 7);
  CHECK(perfect.metrics[5] == kPrimaryMetric);
  for (const auto& [name, value] : perfect.per_metric) CHECK(value == doctest::Approx(1.0));

  const auto empty = evaluate({{"athlete", {}}, {"b", {}}}, ground, standard_schemes(), p);
  for (const auto& [name, value] : empty.per_metric) CHECK(value == 0.0);

  const auto half = evaluate({{"athlete", {"junk food"}}, {"b", {"dog", "cat"}}}, ground, {ans(1)}, p);
  // b: dog earns 3 of an ideal 5
  CHECK(half.per_metric.at("Ans@1") == doctest::Approx((1.0 + 0.6) / 2.0));
  REQUIRE(half.per_question.size() == 2);
  CHECK(half.per_question[1].first == "b");

  const auto avg = evaluate({{"athlete", {"junk food"}}, {"b", {"rat"}}}, ground, {ans(1)}, p);
  CHECK(avg.per_metric.at("Ans@1") == doctest::Approx(0.5));

  CHECK_THROWS_WITH_AS(evaluate({{"zz", {}}, {"yy", {}}}, ground, {ans(1)}, p), doctest::Contains("zz, yy"), DataError);
}

TEST_CASE("scheme names") {
  CHECK(parse_scheme("Inc@3") == inc(3));
  CHECK(parse_scheme("Ans@10") == ans(10));
  CHECK(ans(5).name() == "Ans@5");
  CHECK_THROWS_AS(parse_scheme("Foo@1"), ConfigError);
  CHECK_THROWS_AS(parse_scheme("Inc@x"), ConfigError);
  CHECK_THROWS_AS(parse_scheme("Inc@0"), ConfigError);
}

TEST_CASE("keyword macro accuracy") {
  const KeywordList a{{{"athlete", 2.0}, {"fridge", 1.0}}};
  const KeywordList b{{{"waiter", 2.0}, {"tip", 1.0}}};
  CHECK(keyword_macro_accuracy({a}, {{"athlete", "refrigerator"}}, 2) == 0.5);
  CHECK(keyword_macro_accuracy({a, b}, {{"athlete", "refrigerator", "keep"}, {"waiter", "tip"}}, 2) ==
        doctest::Approx(0.75));
  // denominator is min(m, |gold|)
  CHECK(keyword_macro_accuracy({a, b}, {{"athlete"}, {"tip", "money", "food", "bill"}}, 4) ==
        doctest::Approx((1.0 + 0.25) / 2.0));
  CHECK(keyword_macro_accuracy({a, b, a, b}, {{"athlete"}, {"waiter", "x"}, {"fridge", "y"}, {"tip", "r"}}, 2) ==
        doctest::Approx(0.625));
  CHECK_THROWS_AS(keyword_macro_accuracy({a}, {}, 2), DataError);
}
