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

#include "gencqa/rank.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include "gencqa/dedup.hpp"
#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/text.hpp"

namespace gencqa {

std::size_t RankerCorpus::positives() const {
  return static_cast<std::size_t>(
      std::count_if(instances.begin(), instances.end(), [](const RankerInstance& r) { return r.label == 1; }));
}

std::size_t RankerCorpus::negatives() const { return instances.size() - positives(); }

RankerCorpus build_ranker_corpus(const std::vector<DatasetRecord>& dataset, int n, std::uint64_t seed,
                                 const StopWordList& stop, const SynonymLexicon& lex) {
  if (dataset.size() < 2) throw DataError("build_ranker_corpus needs at least two questions for a negative pool");
  if (n < 1) throw ConfigError("ranker corpus n must be >= 1");

  // Flattened pool of every gold answer; question q owns [offset[q], offset[q+1]).
  std::vector<const std::string*> pool;
  std::vector<std::size_t> offset{0};
  for (const auto& rec : dataset) {
    for (const auto& c : rec.truth.clusters) {
      for (const auto& a : c.answers) pool.push_back(&a);
    }
    offset.push_back(pool.size());
  }

  std::mt19937_64 rng(seed);
  RankerCorpus corpus;
  for (std::size_t q = 0; q < dataset.size(); ++q) {
    const auto& rec = dataset[q];
    const auto& clusters = rec.truth.clusters;
    const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(n), clusters.size());
    if (want == 0) continue;

    std::set<NormalForm> gold;
    for (const auto& c : clusters) {
      for (const auto& a : c.answers) gold.insert(normal_form(a, stop, lex));
    }
    const std::size_t own = offset[q + 1] - offset[q];
    const std::size_t foreign = pool.size() - own;

    std::vector<std::string> negatives;
    std::set<NormalForm> chosen;
    bool exhausted = foreign == 0;
    while (!exhausted && negatives.size() < want) {
      bool filled = false;
      for (int attempt = 0; attempt < kNegativeAttemptsPerSlot; ++attempt) {
        std::size_t r = static_cast<std::size_t>(rng() % foreign);
        if (r >= offset[q]) r += own;
        const std::string& answer = *pool[r];
        NormalForm nf = normal_form(answer, stop, lex);
        if (nf.empty() || gold.count(nf) != 0 || chosen.count(nf) != 0) continue;
        chosen.insert(std::move(nf));
        negatives.push_back(answer);
        filled = true;
        break;
      }
      exhausted = !filled;
    }
    if (exhausted) {
      corpus.skipped.push_back(rec.question.id);
      continue;
    }
    for (std::size_t i = 0; i < want; ++i) {
      corpus.instances.push_back({rec.question.id, rec.question.text, clusters[i].answers.front(), 1});
    }
    for (auto& neg : negatives) corpus.instances.push_back({rec.question.id, rec.question.text, std::move(neg), 0});
  }
  return corpus;
}

void write_ranker_corpus(const std::vector<RankerInstance>& corpus, const std::filesystem::path& path) {
  std::vector<Json> records;
  records.reserve(corpus.size());
  for (const auto& r : corpus) {
    records.push_back({{"id", r.question_id}, {"question", r.question_text}, {"answer", r.answer}, {"label", r.label}});
  }
  write_records(path, records);
}

std::vector<RankerInstance> load_ranker_corpus(const std::filesystem::path& path) {
  std::vector<RankerInstance> out;
  for_each_record(path, [&](const Json& j, std::size_t) {
    RankerInstance r{j.at("id").get<std::string>(), j.at("question").get<std::string>(),
                     j.at("answer").get<std::string>(), j.at("label").get<int>()};
    if (r.label != 0 && r.label != 1) throw DataError("label must be 0 or 1");
    out.push_back(std::move(r));
  });
  return out;
}

FeatureVector extract_features(const std::string& question_text, const std::string& answer, const StopWordList& stop,
                               const SynonymLexicon& lex) {
  const auto q_lemmas = content_lemmas(question_text, stop);
  const auto a_lemmas = content_lemmas(answer, stop);
  const std::set<std::string> q_set(q_lemmas.begin(), q_lemmas.end());
  const std::set<std::string> a_set(a_lemmas.begin(), a_lemmas.end());
  std::set<std::string> q_classes;
  for (const auto& l : q_set) q_classes.insert(lex.class_of(l));

  double shared = 0.0;
  for (const auto& l : a_set) shared += q_set.count(l) != 0 ? 1.0 : 0.0;
  const double a_count = static_cast<double>(a_lemmas.size());
  double in_class = 0.0;
  for (const auto& l : a_lemmas) in_class += q_classes.count(lex.class_of(l)) != 0 ? 1.0 : 0.0;

  FeatureVector x(kFeatureCount, 0.0);
  x[0] = shared;
  x[1] = a_count > 0 ? shared / a_count : 0.0;
  x[2] = a_count;
  x[3] = a_count > 0 ? in_class / a_count : 0.0;
  x[4] = static_cast<double>(utf8_length(trim(answer))) / 32.0;
  x[5] = normalize_text(answer).size() == 1 ? 1.0 : 0.0;
  return x;
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double LogisticModel::logit(const FeatureVector& x) const {
  if (x.size() != weights.size()) {
    throw DataError("feature vector of length " + std::to_string(x.size()) + " for a model with " +
                    std::to_string(weights.size()) + " weights");
  }
  double z = bias;
  for (std::size_t i = 0; i < x.size(); ++i) z += weights[i] * x[i];
  return z;
}

double LogisticModel::predict(const FeatureVector& x) const { return sigmoid(logit(x)); }

void LogisticModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open " + path.string() + " for writing");
  out << Json{{"weights", weights}, {"bias", bias}, {"feature_version", kFeatureVersion}}.dump() << '\n';
}

LogisticModel LogisticModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw DataError(path.string() + ": malformed model file: " + e.what());
  }
  LogisticModel m;
  try {
    if (j.at("feature_version").get<std::string>() != kFeatureVersion) {
      throw DataError(path.string() + ": unsupported feature_version");
    }
    m.weights = j.at("weights").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
  } catch (const Json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  if (m.weights.size() != kFeatureCount) throw DataError(path.string() + ": expected 6 weights");
  for (double w : m.weights) {
    if (!std::isfinite(w)) throw DataError(path.string() + ": non-finite weight");
  }
  if (!std::isfinite(m.bias)) throw DataError(path.string() + ": non-finite bias");
  return m;
}

double instance_bce(int label, double probability) {
  const double p = std::clamp(probability, kProbabilityClamp, 1.0 - kProbabilityClamp);
  return -(label * std::log(p) + (1 - label) * std::log(1.0 - p));
}

double mean_bce(const LogisticModel& model, const LabeledData& data) {
  double total = 0.0;
  for (std::size_t i = 0; i < data.features.size(); ++i) {
    total += instance_bce(data.labels[i], model.predict(data.features[i]));
  }
  return data.features.empty() ? 0.0 : total / static_cast<double>(data.features.size());
}

LogisticGradient bce_gradient(const LogisticModel& model, const LabeledData& data) {
  LogisticGradient g{std::vector<double>(model.weights.size(), 0.0), 0.0};
  if (data.features.empty()) return g;
  for (std::size_t i = 0; i < data.features.size(); ++i) {
    const double residual = model.predict(data.features[i]) - data.labels[i];
    for (std::size_t k = 0; k < g.weights.size(); ++k) g.weights[k] += residual * data.features[i][k];
    g.bias += residual;
  }
  const double inv = 1.0 / static_cast<double>(data.features.size());
  for (auto& w : g.weights) w *= inv;
  g.bias *= inv;
  return g;
}

TrainingResult train_logistic(const LabeledData& data, double learning_rate, int epochs, std::uint64_t /*seed*/) {
  if (data.features.size() != data.labels.size()) throw DataError("features and labels differ in length");
  if (!(learning_rate > 0.0)) throw ConfigError("learning rate must be positive");
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  const bool has_pos = std::find(data.labels.begin(), data.labels.end(), 1) != data.labels.end();
  const bool has_neg = std::find(data.labels.begin(), data.labels.end(), 0) != data.labels.end();
  if (!has_pos || !has_neg) throw DataError("training corpus must contain both labels");
  const std::size_t dim = data.features.front().size();
  for (const auto& x : data.features) {
    if (x.size() != dim) throw DataError("inconsistent feature dimension");
  }

  TrainingResult result;
  result.model.weights.assign(dim, 0.0);
  result.loss_trace.reserve(static_cast<std::size_t>(epochs));
  for (int e = 0; e < epochs; ++e) {
    result.loss_trace.push_back(mean_bce(result.model, data));
    const auto g = bce_gradient(result.model, data);
    for (std::size_t k = 0; k < dim; ++k) result.model.weights[k] -= learning_rate * g.weights[k];
    result.model.bias -= learning_rate * g.bias;
  }
  return result;
}

TrainingResult train_logistic(const std::vector<RankerInstance>& corpus, double learning_rate, int epochs,
                              std::uint64_t seed, const StopWordList& stop, const SynonymLexicon& lex) {
  LabeledData data;
  data.features.reserve(corpus.size());
  for (const auto& r : corpus) {
    data.features.push_back(extract_features(r.question_text, r.answer, stop, lex));
    data.labels.push_back(r.label);
  }
  if (data.features.empty()) throw DataError("training corpus is empty");
  return train_logistic(data, learning_rate, epochs, seed);
}

double training_accuracy(const LogisticModel& model, const LabeledData& data) {
  if (data.features.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.features.size(); ++i) {
    const int guess = model.predict(data.features[i]) >= 0.5 ? 1 : 0;
    correct += guess == data.labels[i] ? 1 : 0;
  }
  return static_cast<double>(correct) / static_cast<double>(data.features.size());
}

LogisticScorer::LogisticScorer(LogisticModel model, StopWordList stop, SynonymLexicon lex)
    : model_(std::move(model)), stop_(std::move(stop)), lex_(std::move(lex)) {}

std::vector<double> LogisticScorer::score(const std::string& question, const std::vector<std::string>& answers) const {
  std::vector<double> out;
  out.reserve(answers.size());
  for (const auto& a : answers) out.push_back(model_.predict(extract_features(question, a, stop_, lex_)));
  return out;
}

std::vector<double> RemoteScorer::score(const std::string& question, const std::vector<std::string>& answers) const {
  const Json reply = channel_->exchange_json({{"question", question}, {"answers", answers}});
  if (!reply.is_object() || !reply.contains("scores") || !reply.at("scores").is_array()) {
    throw BackendError(name() + ": response lacks a \"scores\" array");
  }
  std::vector<double> out;
  for (const auto& s : reply.at("scores")) {
    if (!s.is_number()) throw BackendError(name() + ": scores must be numbers");
    out.push_back(s.get<double>());
  }
  return out;
}

std::vector<RankedAnswer> rank_answers(const Question& question, const std::vector<Candidate>& candidates,
                                       const Scorer& scorer, int final_count) {
  if (final_count < 1) throw ConfigError("final_count must be >= 1");
  std::vector<std::string> answers;
  answers.reserve(candidates.size());
  for (const auto& c : candidates) answers.push_back(c.text);
  if (answers.empty()) return {};

  std::vector<double> scores;
  try {
    scores = scorer.score(question.text, answers);
  } catch (const std::exception& e) {
    throw BackendError(scorer.name() + ": " + e.what());
  }
  if (scores.size() != answers.size()) {
    throw BackendError(scorer.name() + ": returned " + std::to_string(scores.size()) + " scores for " +
                       std::to_string(answers.size()) + " answers");
  }
  std::vector<RankedAnswer> ranked;
  ranked.reserve(answers.size());
  for (std::size_t i = 0; i < answers.size(); ++i) {
    if (!(scores[i] >= 0.0 && scores[i] <= 1.0)) {
      throw BackendError(scorer.name() + ": plausibility " + std::to_string(scores[i]) + " outside [0, 1]");
    }
    ranked.push_back({answers[i], scores[i]});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedAnswer& a, const RankedAnswer& b) { return a.plausibility > b.plausibility; });
  if (ranked.size() > static_cast<std::size_t>(final_count)) ranked.resize(static_cast<std::size_t>(final_count));
  return ranked;
}

}  // namespace gencqa
