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

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "gencqa/channel.hpp"
#include "gencqa/data.hpp"
#include "gencqa/generate.hpp"
#include "gencqa/lexicon.hpp"

namespace gencqa {

struct RankerInstance {
  std::string question_id;
  std::string question_text;
  std::string answer;
  int label = 0;  // 1 plausible, 0 implausible

  friend bool operator==(const RankerInstance&, const RankerInstance&) = default;
};

struct RankerCorpus {
  std::vector<RankerInstance> instances;
  std::vector<std::string> skipped;  // questions whose negative pool ran dry

  std::size_t positives() const;
  std::size_t negatives() const;
};

inline constexpr int kNegativeAttemptsPerSlot = 50;

// Positives: the first answer of each of the top-n clusters. Negatives: the
// same number of gold answers sampled (seeded, uniform) from other
// questions, rejecting any whose NormalForm equals one of the target's gold
// answers.
RankerCorpus build_ranker_corpus(const std::vector<DatasetRecord>& dataset, int n, std::uint64_t seed,
                                 const StopWordList& stop, const SynonymLexicon& lex);

void write_ranker_corpus(const std::vector<RankerInstance>& corpus, const std::filesystem::path& path);
std::vector<RankerInstance> load_ranker_corpus(const std::filesystem::path& path);

inline constexpr std::size_t kFeatureCount = 6;
inline constexpr const char* kFeatureVersion = "lexical-v1";

using FeatureVector = std::vector<double>;

// (1) shared content lemmas, (2) (1) / answer content tokens, (3) answer
// content tokens, (4) fraction of answer lemmas in a question synonym class,
// (5) answer length in code points / 32, (6) single-token answer indicator.
FeatureVector extract_features(const std::string& question_text, const std::string& answer, const StopWordList& stop,
                               const SynonymLexicon& lex);

struct LogisticModel {
  std::vector<double> weights;
  double bias = 0.0;

  double logit(const FeatureVector& x) const;
  double predict(const FeatureVector& x) const;

  void save(const std::filesystem::path& path) const;
  static LogisticModel load(const std::filesystem::path& path);
};

struct LabeledData {
  std::vector<FeatureVector> features;
  std::vector<int> labels;
};

struct LogisticGradient {
  std::vector<double> weights;
  double bias = 0.0;
};

double sigmoid(double z);

inline constexpr double kProbabilityClamp = 1e-7;

// -[y log p + (1 - y) log(1 - p)] with p clamped to [1e-7, 1 - 1e-7].
double instance_bce(int label, double probability);
double mean_bce(const LogisticModel& model, const LabeledData& data);
LogisticGradient bce_gradient(const LogisticModel& model, const LabeledData& data);

struct TrainingResult {
  LogisticModel model;
  std::vector<double> loss_trace;  // mean BCE before each epoch's update
};

// Full-batch gradient descent from zero-initialised parameters.
TrainingResult train_logistic(const LabeledData& data, double learning_rate, int epochs, std::uint64_t seed);
TrainingResult train_logistic(const std::vector<RankerInstance>& corpus, double learning_rate, int epochs,
                              std::uint64_t seed, const StopWordList& stop, const SynonymLexicon& lex);

double training_accuracy(const LogisticModel& model, const LabeledData& data);

class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::string name() const = 0;
  // One plausibility in [0, 1] per answer.
  virtual std::vector<double> score(const std::string& question, const std::vector<std::string>& answers) const = 0;
};

class LogisticScorer final : public Scorer {
 public:
  LogisticScorer(LogisticModel model, StopWordList stop, SynonymLexicon lex);

  std::string name() const override { return "logistic-scorer"; }
  std::vector<double> score(const std::string& question, const std::vector<std::string>& answers) const override;

 private:
  LogisticModel model_;
  StopWordList stop_;
  SynonymLexicon lex_;
};

class ConstantScorer final : public Scorer {
 public:
  explicit ConstantScorer(double value = 0.5) : value_(value) {}

  std::string name() const override { return "constant-scorer"; }
  std::vector<double> score(const std::string&, const std::vector<std::string>& answers) const override {
    return std::vector<double>(answers.size(), value_);
  }

 private:
  double value_;
};

// {"question","answers"} -> {"scores"} over a LineChannel.
class RemoteScorer final : public Scorer {
 public:
  explicit RemoteScorer(std::unique_ptr<LineChannel> channel) : channel_(std::move(channel)) {}

  std::string name() const override { return channel_->describe(); }
  std::vector<double> score(const std::string& question, const std::vector<std::string>& answers) const override;

 private:
  std::unique_ptr<LineChannel> channel_;
};

struct RankedAnswer {
  std::string answer;
  double plausibility = 0.0;
};

inline constexpr int kDefaultFinalCount = 10;

// Sorts by plausibility descending (input order among ties) and keeps the
// first `final_count`.
std::vector<RankedAnswer> rank_answers(const Question& question, const std::vector<Candidate>& candidates,
                                       const Scorer& scorer, int final_count = kDefaultFinalCount);

}  // namespace gencqa
