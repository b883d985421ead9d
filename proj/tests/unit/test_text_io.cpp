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

#include <random>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/text.hpp"
#include "test_util.hpp"

using namespace gencqa;

TEST_CASE("normalize_text lowercases and strips punctuation") {
  CHECK(normalize_text("Name something, quickly!").tokens == std::vector<std::string>{"name", "something", "quickly"});
  CHECK(normalize_text("").empty());
  CHECK(normalize_text("   \t ").empty());
  // apostrophe is punctuation, so the possessive splits off "s"
  CHECK(normalize_text("The athlete's refrigerator").tokens ==
        std::vector<std::string>{"the", "athlete", "s", "refrigerator"});
  CHECK(normalize_text("junk-food/COKE").tokens == std::vector<std::string>{"junk", "food", "coke"});
}

TEST_CASE("normalize_text folds case outside ASCII") {
  CHECK(normalize_text("CAFÉ Ünïcode").tokens == std::vector<std::string>{"café", "ünïcode"});
  CHECK(normalize_text("ΑΘΗΝΑ Москва").tokens == std::vector<std::string>{"αθηνα", "москва"});
  // typographic quotes and dashes separate tokens
  CHECK(normalize_text("it’s “fun”—really").tokens ==
        std::vector<std::string>{"it", "s", "fun", "really"});
}

TEST_CASE("normalize_text is idempotent on its joined output") {
  std::mt19937 rng(3);
  const std::string alphabet = "abcXYZ09 ,.!?'-\t";
  for (int trial = 0; trial < 300; ++trial) {
    std::string s;
    const int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) s.push_back(alphabet[rng() % alphabet.size()]);
    const auto once = normalize_text(s);
    CHECK(normalize_text(once.joined()) == once);
    for (const auto& t : once.tokens) {
      CHECK_FALSE(t.empty());
      CHECK(t.find(' ') == std::string::npos);
    }
  }
}

TEST_CASE("load_dataset sorts clusters by weight, stable on ties") {
  const auto records = load_dataset(fixture("athlete_clusters.jsonl"));
  REQUIRE(records.size() == 1);
  const auto& clusters = records[0].truth.clusters;
  REQUIRE(clusters.size() == 4);
  CHECK(clusters[0].weight == 36);
  CHECK(clusters[1].weight == 24);
  CHECK(clusters[2].weight == 24);
  CHECK(clusters[3].weight == 7);
  CHECK(clusters[1].label == "unhealthy drinks");
  CHECK(clusters[2].label == "clothing/shoes");
}

TEST_CASE("load_dataset edge cases") {
  TempDir tmp;
  CHECK(load_dataset(tmp.write("empty.jsonl", "")).empty());

  const auto two = tmp.write("order.jsonl",
                             R"({"id":"a","question":"q?","clusters":[{"label":null,"count":7,"answers":["x"]},)"
                             R"({"label":"b","count":36,"answers":["y"]}]})"
                             "\n");
  const auto recs = load_dataset(two);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].truth.clusters[0].weight == 36);
  CHECK(recs[0].truth.clusters[1].weight == 7);
  CHECK_FALSE(recs[0].truth.clusters[1].label.has_value());

  const auto bad = tmp.write("bad.jsonl", "{\"id\":\"a\",\"question\":\"q\"}\n{not json}\n");
  try {
    load_dataset(bad);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }

  const auto dup = tmp.write("dup.jsonl", "{\"id\":\"a\",\"question\":\"q\"}\n{\"id\":\"a\",\"question\":\"r\"}\n");
  CHECK_THROWS_AS(load_dataset(dup), DataError);

  const auto zero = tmp.write("zero.jsonl", R"({"id":"a","question":"q","clusters":[{"count":0,"answers":["x"]}]})");
  CHECK_THROWS_AS(load_dataset(zero), DataError);

  const auto dup_answer =
      tmp.write("dupans.jsonl", R"({"id":"a","question":"q","clusters":[{"count":2,"answers":["Coke","coke!"]}]})");
  CHECK_THROWS_AS(load_dataset(dup_answer), DataError);
}

TEST_CASE("dataset and predictions round-trip") {
  TempDir tmp;
  auto records = load_dataset(fixture("golden/questions.jsonl"));
  write_dataset(records, tmp.file("copy.jsonl"));
  CHECK(load_dataset(tmp.file("copy.jsonl")) == records);

  write_predictions({}, tmp.file("none.jsonl"));
  CHECK(slurp(tmp.file("none.jsonl")).empty());

  std::vector<Prediction> one{{"q1", {"beer", "ice cream", "chocolate"}}};
  write_predictions(one, tmp.file("one.jsonl"));
  const auto one_text = slurp(tmp.file("one.jsonl"));
  CHECK(std::count(one_text.begin(), one_text.end(), '\n') == 1);
  CHECK(load_predictions(tmp.file("one.jsonl")) == one);

  std::vector<Prediction> many;
  for (int i = 0; i < 102; ++i) many.push_back({"q" + std::to_string(i), {"a" + std::to_string(i)}});
  write_predictions(many, tmp.file("many.jsonl"));
  const auto text = slurp(tmp.file("many.jsonl"));
  CHECK(std::count(text.begin(), text.end(), '\n') == 102);
  CHECK(load_predictions(tmp.file("many.jsonl")) == many);
}

TEST_CASE("write_predictions reports the failing path") {
  try {
    write_predictions({}, "/nonexistent-dir/x/preds.jsonl");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/x/preds.jsonl") != std::string::npos);
  }
}
