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
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gencqa/data.hpp"
#include "gencqa/lexicon.hpp"

namespace gencqa {

// Smoothed inverse document frequency over a question corpus:
//   idf(t) = ln((N + 1) / (df(t) + 1)) + 1
// Tokens never seen get the df = 0 value, ln(N + 1) + 1.
class IdfTable {
 public:
  IdfTable(std::unordered_map<std::string, double> idf, int num_questions);

  double idf(const std::string& token) const;
  std::optional<double> stored(const std::string& token) const;
  double unknown_idf() const;
  int num_questions() const { return num_questions_; }
  std::size_t size() const { return idf_.size(); }
  const std::unordered_map<std::string, double>& entries() const { return idf_; }

  // Header record {"num_questions"} then {"token","idf"} records sorted by token.
  void save(const std::filesystem::path& path) const;
  static IdfTable load(const std::filesystem::path& path);

 private:
  std::unordered_map<std::string, double> idf_;
  int num_questions_;
};

struct Keyword {
  std::string token;
  double score = 0.0;

  friend bool operator==(const Keyword&, const Keyword&) = default;
};

// Scores non-increasing, tokens distinct.
struct KeywordList {
  std::vector<Keyword> keywords;

  std::vector<std::string> tokens() const;
  std::size_t size() const { return keywords.size(); }
  bool empty() const { return keywords.empty(); }
};

double smoothed_idf(int num_questions, int document_frequency);

IdfTable build_idf(const std::vector<Question>& questions, const StopWordList& stop_words);

// Top-m tokens by tf * idf; ties go to the token that occurs first.
KeywordList extract_keywords(const Question& question, const IdfTable& idf, int m,
                             const StopWordList& stop_words);

}  // namespace gencqa
