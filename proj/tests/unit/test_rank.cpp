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

#include <cmath>
#include <random>

#include "gencqa/dedup.hpp"
#include "gencqa/error.hpp"
#include "gencqa/rank.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace gencqa;

namespace {

DatasetRecord rec(const std::string& id, const std::string& text, std::vector<std::vector<std::string>> clusters) {
  DatasetRecord r{{id, text}, {id, {}}};
  int w = 10;
  for (auto& c : clusters) r.truth.clusters.push_back({std::nullopt, w--, std::move(c)});
  return r;
}

std::vector<DatasetRecord> small_dataset() {
  return {
      rec("a", "Name a fruit.", {{"apple", "apples"}, {"banana"}, {"pear"}}),
      rec("b", "Name a color.", {{"red"}, {"blue"}, {"green"}}),
      rec("c", "Name a pet.", {{"dog", "puppy"}, {"cat"}, {"fish"}}),
      rec("d", "Name a drink.", {{"soda"}, {"water"}, {"apple juice"}}),
  };
}

std::vector<Candidate> cands(int n) {
  std::vector<Candidate> out;
  for (int i = 0; i < n; ++i) out.push_back({"answer" + std::to_string(i), -0.1 * i});
  return out;
}

class VectorScorer final : public Scorer {
 public:
  explicit VectorScorer(std::vector<double> s) : s_(std::move(s)) {}
  std::string name() const override { return "vector"; }
  std::vector<double> score(const std::string&, const std::vector<std::string>& answers) const override {
    return {s_.begin(), s_.begin() + static_cast<std::ptrdiff_t>(std::min(answers.size(), s_.size()))};
  }

 private:
  std::vector<double> s_;
};

}  // namespace

TEST_CASE("ranker corpus is balanced and seeded") {
  const auto stop = StopWordList::english();
  const SynonymLexicon lex;
  const auto data = small_dataset();
  const auto corpus = build_ranker_corpus(data, 2, 42, stop, lex);
  CHECK(corpus.skipped.empty());
  CHECK(corpus.positives() == 8);
  CHECK(corpus.negatives() == 8);
  CHECK(corpus.instances[0].answer == "apple");
  CHECK(corpus.instances[1].answer == "banana");
  CHECK(build_ranker_corpus(data, 2, 42, stop, lex).instances == corpus.instances);

  bool differs = false;
  for (std::uint64_t s = 1; s < 20 && !differs; ++s) differs = build_ranker_corpus(data, 2, s, stop, lex).instances != corpus.instances;
  CHECK(differs);

  // no negative may match one of its own question's gold answers
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (const auto& inst : build_ranker_corpus(data, 3, seed, stop, lex).instances) {
      if (inst.label == 1) continue;
      const auto& own = *std::find_if(data.begin(), data.end(), [&](const auto& r) { return r.question.id == inst.question_id; });
      for (const auto& c : own.truth.clusters) {
        for (const auto& a : c.answers) CHECK(normal_form(a, stop, lex) != normal_form(inst.answer, stop, lex));
      }
    }
  }
}

TEST_CASE("ranker corpus edge cases") {
  const auto stop = StopWordList::english();
  const SynonymLexicon lex;
  CHECK_THROWS_AS(build_ranker_corpus({small_dataset()[0]}, 2, 1, stop, lex), DataError);
  CHECK_THROWS_AS(build_ranker_corpus(small_dataset(), 0, 1, stop, lex), ConfigError);

  // the only foreign answers collide with the target's gold answers
  const std::vector<DatasetRecord> twins = {rec("x", "Name a fruit.", {{"apple"}, {"pear"}}),
                                            rec("y", "Name a tree fruit.", {{"apples"}, {"pears"}})};
  const auto corpus = build_ranker_corpus(twins, 2, 3, stop, lex);
  CHECK(corpus.instances.empty());
  CHECK(corpus.skipped == std::vector<std::string>{"x", "y"});

  TempDir tmp;
  const auto full = build_ranker_corpus(small_dataset(), 1, 5, stop, lex);
  write_ranker_corpus(full.instances, tmp.file("c.jsonl"));
  CHECK(load_ranker_corpus(tmp.file("c.jsonl")) == full.instances);
}

TEST_CASE("lexical features") {
  const auto stop = StopWordList::english();
  const auto lex = SynonymLexicon::load(fixture("lexicon.txt"));
  const auto x = extract_features("Name something you ride, like a bike.", "bicycle bikes", stop, lex);
  REQUIRE(x.size() == kFeatureCount);
  CHECK(x[0] == 1.0);
  CHECK(x[1] == 0.5);
  CHECK(x[2] == 2.0);
  CHECK(x[3] == 1.0);
  CHECK(x[4] == doctest::Approx(13.0 / 32.0));
  CHECK(x[5] == 0.0);
  const auto y = extract_features("Name a pet.", "the", stop, lex);
  CHECK(y[2] == 0.0);
  CHECK(y[1] == 0.0);
  CHECK(y[5] == 1.0);
}

TEST_CASE("binary cross-entropy") {
  CHECK(instance_bce(1, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(instance_bce(0, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(instance_bce(1, 0.0) == doctest::Approx(-std::log(1e-7)).epsilon(1e-12));
  CHECK(instance_bce(0, 1.0) == doctest::Approx(-std::log(1.0 - (1.0 - 1e-7))).epsilon(1e-12));
  CHECK(std::isfinite(instance_bce(1, 0.0)));
  LogisticModel zero{std::vector<double>(3, 0.0), 0.0};
  const LabeledData d{{{1, 2, 3}, {0, 0, 1}}, {1, 0}};
  CHECK(mean_bce(zero, d) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("gradient matches finite differences") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd(0.0, 1.0);
  LabeledData d;
  for (int i = 0; i < 12; ++i) {
    FeatureVector x(kFeatureCount);
    for (auto& v : x) v = nd(rng);
    d.features.push_back(x);
    d.labels.push_back(i % 2);
  }
  LogisticModel m{std::vector<double>(kFeatureCount), nd(rng)};
  for (auto& w : m.weights) w = 0.5 * nd(rng);
  const auto g = bce_gradient(m, d);
  const double h = 1e-6;
  for (std::size_t k = 0; k < kFeatureCount; ++k) {
    auto wp = m.weights;
    auto wm = m.weights;
    wp[k] += h;
    wm[k] -= h;
    const double fd = (oracle::logistic_loss(wp, m.bias, d.features, d.labels) -
                       oracle::logistic_loss(wm, m.bias, d.features, d.labels)) / (2 * h);
    CHECK(g.weights[k] == doctest::Approx(fd).epsilon(1e-6));
  }
  const double fdb = (oracle::logistic_loss(m.weights, m.bias + h, d.features, d.labels) -
                      oracle::logistic_loss(m.weights, m.bias - h, d.features, d.labels)) / (2 * h);
  CHECK(g.bias == doctest::Approx(fdb).epsilon(1e-6));
  CHECK(mean_bce(m, d) == doctest::Approx(oracle::logistic_loss(m.weights, m.bias, d.features, d.labels)).epsilon(1e-12));
}

TEST_CASE("toy training") {
  const LabeledData toy{{{-2.0}, {-1.0}, {1.0}, {2.0}}, {0, 0, 1, 1}};
  const auto r = train_logistic(toy, 0.5, 200, 0);
  CHECK(training_accuracy(r.model, toy) == 1.0);
  CHECK(r.loss_trace.size() == 200);
  CHECK(r.loss_trace.front() == doctest::Approx(std::log(2.0)));

  const auto slow = train_logistic(toy, 0.01, 100, 0);
  for (std::size_t i = 1; i < slow.loss_trace.size(); ++i) CHECK(slow.loss_trace[i] <= slow.loss_trace[i - 1]);

  CHECK(train_logistic(toy, 0.5, 10, 1).model.weights == train_logistic(toy, 0.5, 10, 2).model.weights);
  CHECK_THROWS_AS(train_logistic(LabeledData{{{1.0}}, {1}}, 0.5, 10, 0), DataError);
  CHECK_THROWS_AS(train_logistic(toy, 0.0, 10, 0), ConfigError);
  CHECK_THROWS_AS(train_logistic(toy, 0.5, 0, 0), ConfigError);
}

TEST_CASE("model persistence") {
  TempDir tmp;
  LogisticModel m{{0.1, -0.2, 0.3, -0.4, 0.5, -0.6}, 0.7};
  m.save(tmp.file("m.json"));
  const auto back = LogisticModel::load(tmp.file("m.json"));
  CHECK(back.weights == m.weights);
  CHECK(back.bias == m.bias);
  CHECK_THROWS_AS(LogisticModel::load(tmp.write("bad.json", "{\"weights\":[1],\"bias\":0,\"feature_version\":\"lexical-v1\"}")),
                  DataError);
  CHECK_THROWS_AS(LogisticModel::load(tmp.write("old.json",
                                                "{\"weights\":[1,1,1,1,1,1],\"bias\":0,\"feature_version\":\"v0\"}")),
                  DataError);
}

TEST_CASE("ranking") {
  const Question q{"q", "Name something."};
  SUBCASE("truncates to the final count") {
    const auto r = rank_answers(q, cands(12), ConstantScorer(0.5));
    REQUIRE(r.size() == 10);
    // constant scores keep candidate order
    for (int i = 0; i < 10; ++i) CHECK(r[static_cast<std::size_t>(i)].answer == "answer" + std::to_string(i));
  }
  SUBCASE("sorted by plausibility") {
    const auto r = rank_answers(q, cands(3), VectorScorer({0.2, 0.9, 0.5}));
    REQUIRE(r.size() == 3);
    CHECK(r[0].answer == "answer1");
    CHECK(r[1].answer == "answer2");
    CHECK(r[2].answer == "answer0");
    CHECK(rank_answers(q, cands(3), VectorScorer({0.2, 0.9, 0.5}), 2).size() == 2);
  }
  SUBCASE("invalid scores") {
    CHECK_THROWS_AS(rank_answers(q, cands(2), VectorScorer({0.2, 1.5})), BackendError);
    CHECK_THROWS_AS(rank_answers(q, cands(2), VectorScorer({-0.1, 0.5})), BackendError);
    CHECK_THROWS_AS(rank_answers(q, cands(2), VectorScorer({std::nan(""), 0.5})), BackendError);
    CHECK_THROWS_AS(rank_answers(q, cands(3), VectorScorer({0.2, 0.5})), BackendError);
  }
  CHECK(rank_answers(q, {}, ConstantScorer()).empty());
  CHECK_THROWS_AS(rank_answers(q, cands(2), ConstantScorer(), 0), ConfigError);
}
