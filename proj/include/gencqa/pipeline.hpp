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
#include <optional>
#include <string>
#include <vector>

#include "gencqa/channel.hpp"
#include "gencqa/data.hpp"
#include "gencqa/dedup.hpp"
#include "gencqa/generate.hpp"
#include "gencqa/keywords.hpp"
#include "gencqa/lexicon.hpp"
#include "gencqa/rank.hpp"
#include "gencqa/retrieve.hpp"
#include "gencqa/rewrite.hpp"

namespace gencqa {

struct BackendEndpoint {
  BackendKind kind = BackendKind::kMock;
  std::string endpoint;  // shell command or socket address; unused for mock
};

struct PipelineConfig {
  // Paths; empty means "not configured".
  std::filesystem::path dataset;
  std::filesystem::path dictionary;
  std::filesystem::path stop_words;
  std::filesystem::path lexicon;
  std::filesystem::path idf;
  std::filesystem::path model;
  std::filesystem::path generator_fixture;
  std::filesystem::path rules;

  int m = 2;
  int n = 2;
  int beam_width = 24;
  int retain = kDefaultRetain;
  int final_count = kDefaultFinalCount;
  int max_answer_tokens = 3;
  std::uint64_t seed = 0;
  int workers = 0;  // 0: hardware concurrency

  BackendEndpoint generator;
  BackendEndpoint scorer;
  BackendEndpoint embedder;
  std::size_t embedder_dim = HashedBagOfLemmasEmbedder::kDefaultDim;

  Markers markers;

  void validate() const;
};

// Flat JSON object; unknown keys are errors. Relative paths resolve against
// the config file's directory. GENCQA_{GENERATOR,SCORER,EMBEDDER}_ENDPOINT
// override the corresponding endpoint.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
void apply_environment_overrides(PipelineConfig& config);

struct QuestionError {
  std::string question_id;
  std::string message;
};

struct PipelineResult {
  std::vector<Prediction> predictions;  // one per input question, input order
  std::vector<QuestionError> errors;
};

// Per-question trace of every stage, for debugging and the golden tests.
struct QuestionTrace {
  KeywordList keywords;
  RewrittenQuestion rewritten;
  KnowledgeSet knowledge;
  Prompt prompt;
  std::vector<Candidate> generated;
  std::vector<Candidate> retained;
  std::vector<RankedAnswer> ranked;
};

// Loads every configured resource once; shared read-only across workers.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config, const std::vector<Question>& fallback_idf_corpus = {});

  QuestionTrace run_one(const Question& question) const;
  PipelineResult run(const std::vector<Question>& questions) const;

  const PipelineConfig& config() const { return config_; }

 private:
  PipelineConfig config_;
  StopWordList stop_;
  SynonymLexicon lex_;
  std::unique_ptr<IdfTable> idf_;
  DictionaryIndex index_;
  std::vector<RewriteRule> rules_;
  std::unique_ptr<Embedder> embedder_;
  std::unique_ptr<GeneratorBackend> generator_;
  std::unique_ptr<Scorer> scorer_;
};

PipelineResult run_pipeline(const PipelineConfig& config, const std::vector<Question>& questions);

StopWordList load_stop_words(const PipelineConfig& config);
SynonymLexicon load_lexicon(const PipelineConfig& config);
std::vector<RewriteRule> load_rules_or_default(const PipelineConfig& config);
std::unique_ptr<Embedder> make_embedder(const PipelineConfig& config, const StopWordList& stop);
std::unique_ptr<GeneratorBackend> make_generator(const PipelineConfig& config);
std::unique_ptr<Scorer> make_scorer(const PipelineConfig& config, const StopWordList& stop, const SynonymLexicon& lex);

}  // namespace gencqa
