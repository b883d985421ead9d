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

#include "gencqa/dedup.hpp"
#include "gencqa/error.hpp"
#include "test_util.hpp"

using namespace gencqa;

namespace {

std::vector<std::string> texts(const std::vector<Candidate>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.text);
  return out;
}

}  // namespace

TEST_CASE("synonym lexicon") {
  const auto lex = SynonymLexicon::load(fixture("lexicon.txt"));
  CHECK(lex.synset_count() == 3);
  CHECK(lex.class_of("bicycle") == "bicycle");
  CHECK(lex.class_of("bike") == "bicycle");
  CHECK(lex.class_of("cycle") == "bicycle");
  CHECK(lex.class_of("pop") == "coke");
  CHECK(lex.class_of("train") == "train");
  const SynonymLexicon merged({{"a", "b"}, {"c", "d"}, {"d", "b"}});
  CHECK(merged.class_of("c") == "a");
  CHECK(merged.same_class("a", "d"));
}

TEST_CASE("bike, bikes, bicycle") {
  const auto stop = StopWordList::english();
  const std::vector<Candidate> in = {{"bike", -0.1}, {"bikes", -0.2}, {"bicycle", -0.3}};
  CHECK(texts(dedup(in, stop, SynonymLexicon::load(fixture("lexicon.txt")))) == std::vector<std::string>{"bike"});
  CHECK(texts(dedup(in, stop, SynonymLexicon{})) == std::vector<std::string>{"bike", "bicycle"});
}

TEST_CASE("normal forms") {
  const auto stop = StopWordList::english();
  const auto lex = SynonymLexicon::load(fixture("lexicon.txt"));
  CHECK(normal_form("a beer", stop, lex) == normal_form("beers", stop, lex));
  CHECK(normal_form("the ice cream", stop, lex) == normal_form("cream ice", stop, lex));
  CHECK(normal_form("the", stop, lex).empty());
  CHECK(normal_form("my Auto", stop, lex).class_ids == std::set<std::string>{"auto"});
  const std::vector<Candidate> in = {{"the", -0.1}, {"a", -0.2}, {"soda", -0.3}, {"cokes", -0.4}};
  CHECK(texts(dedup(in, stop, lex)) == std::vector<std::string>{"soda"});
}

TEST_CASE("dedup properties on random lists") {
  const auto stop = StopWordList::english();
  const auto lex = SynonymLexicon::load(fixture("lexicon.txt"));
  const std::vector<std::string> vocab = {"bike", "bikes", "bicycle", "car", "cars", "auto",  "soda", "coke",
                                          "pop",  "the",   "a",       "ice", "cream", "socks", "sock", "beer"};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Candidate> in;
    const int len = static_cast<int>(rng() % 20);
    double conf = 0.0;
    for (int i = 0; i < len; ++i) {
      std::string text = vocab[rng() % vocab.size()];
      if (rng() % 3 == 0) text += " " + vocab[rng() % vocab.size()];
      conf -= static_cast<double>(rng() % 4) * 0.1;
      in.push_back({text, conf});
    }
    const auto once = dedup(in, stop, lex);
    CHECK(dedup(once, stop, lex) == once);
    std::set<NormalForm> forms;
    for (const auto& c : once) {
      const auto nf = normal_form(c.text, stop, lex);
      CHECK_FALSE(nf.empty());
      CHECK(forms.insert(nf).second);
    }
    // order-preserving subsequence
    std::size_t j = 0;
    for (const auto& c : in) {
      if (j < once.size() && c == once[j]) ++j;
    }
    CHECK(j == once.size());
    // every input form is represented by its first occurrence
    for (const auto& c : in) {
      const auto nf = normal_form(c.text, stop, lex);
      if (!nf.empty()) CHECK(forms.count(nf) == 1);
    }
  }
}

TEST_CASE("retain top") {
  std::vector<Candidate> in;
  for (int i = 0; i < 20; ++i) in.push_back({"c" + std::to_string(i), -i * 0.1});
  const auto kept = retain_top(in);
  REQUIRE(kept.size() == 12);
  CHECK(kept.back().text == "c11");
  CHECK(retain_top(in, 3).size() == 3);
  CHECK(retain_top({in.begin(), in.begin() + 2}).size() == 2);
  CHECK_THROWS_AS(retain_top(in, 0), ConfigError);
}
