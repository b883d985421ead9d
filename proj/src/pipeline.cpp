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

#include "gencqa/pipeline.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"

namespace gencqa {

void PipelineConfig::validate() const {
  if (m < 1) throw ConfigError("m must be >= 1");
  if (n < 1) throw ConfigError("n must be >= 1");
  if (beam_width < 1) throw ConfigError("beam_width must be >= 1");
  if (retain < 1) throw ConfigError("retain must be >= 1");
  if (final_count < 1) throw ConfigError("final_count must be >= 1");
  if (final_count > retain) throw ConfigError("final_count must not exceed retain");
  if (max_answer_tokens < 1) throw ConfigError("max_answer_tokens must be >= 1");
  if (workers < 0) throw ConfigError("workers must be >= 0");
  if (embedder_dim < 1) throw ConfigError("embedder_dim must be >= 1");
  for (const auto* b : {&generator, &scorer, &embedder}) {
    if (b->kind != BackendKind::kMock && b->endpoint.empty()) {
      throw ConfigError(to_string(b->kind) + " backend needs an endpoint");
    }
  }
}

PipelineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  PipelineConfig c;
  const auto path_of = [&](const nlohmann::json& v) {
    std::filesystem::path p = v.get<std::string>();
    if (p.empty() || p.is_absolute()) return p;
    return base_dir / p;
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "dataset") c.dataset = path_of(v);
      else if (key == "dictionary") c.dictionary = path_of(v);
      else if (key == "stop_words") c.stop_words = path_of(v);
      else if (key == "lexicon") c.lexicon = path_of(v);
      else if (key == "idf") c.idf = path_of(v);
      else if (key == "model") c.model = path_of(v);
      else if (key == "generator_fixture") c.generator_fixture = path_of(v);
      else if (key == "rules") c.rules = path_of(v);
      else if (key == "m") c.m = v.get<int>();
      else if (key == "n") c.n = v.get<int>();
      else if (key == "beam_width") c.beam_width = v.get<int>();
      else if (key == "retain") c.retain = v.get<int>();
      else if (key == "final_count") c.final_count = v.get<int>();
      else if (key == "max_answer_tokens") c.max_answer_tokens = v.get<int>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "workers") c.workers = v.get<int>();
      else if (key == "generator_kind") c.generator.kind = parse_backend_kind(v.get<std::string>());
      else if (key == "generator_endpoint") c.generator.endpoint = v.get<std::string>();
      else if (key == "scorer_kind") c.scorer.kind = parse_backend_kind(v.get<std::string>());
      else if (key == "scorer_endpoint") c.scorer.endpoint = v.get<std::string>();
      else if (key == "embedder_kind") c.embedder.kind = parse_backend_kind(v.get<std::string>());
      else if (key == "embedder_endpoint") c.embedder.endpoint = v.get<std::string>();
      else if (key == "embedder_dim") c.embedder_dim = v.get<std::size_t>();
      else if (key == "marker_bos") c.markers.bos = v.get<std::string>();
      else if (key == "marker_sep") c.markers.sep = v.get<std::string>();
      else if (key == "marker_mask") c.markers.mask = v.get<std::string>();
      else if (key == "marker_eos") c.markers.eos = v.get<std::string>();
      else throw ConfigError("unknown config key \"" + key + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config value has the wrong type: ") + e.what());
  }
  return c;
}

void apply_environment_overrides(PipelineConfig& config) {
  const auto override = [](const char* var, BackendEndpoint& b) {
    if (const char* v = std::getenv(var); v != nullptr && *v != '\0') b.endpoint = v;
  };
  override("GENCQA_GENERATOR_ENDPOINT", config.generator);
  override("GENCQA_SCORER_ENDPOINT", config.scorer);
  override("GENCQA_EMBEDDER_ENDPOINT", config.embedder);
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path.string() + ": malformed config: " + e.what());
  }
  auto c = config_from_json(j, path.parent_path());
  apply_environment_overrides(c);
  return c;
}

StopWordList load_stop_words(const PipelineConfig& config) {
  return config.stop_words.empty() ? StopWordList::english() : StopWordList::load(config.stop_words);
}

SynonymLexicon load_lexicon(const PipelineConfig& config) {
  return config.lexicon.empty() ? SynonymLexicon{} : SynonymLexicon::load(config.lexicon);
}

std::vector<RewriteRule> load_rules_or_default(const PipelineConfig& config) {
  return config.rules.empty() ? default_rules() : load_rules(config.rules);
}

std::unique_ptr<Embedder> make_embedder(const PipelineConfig& config, const StopWordList& stop) {
  if (config.embedder.kind == BackendKind::kMock) {
    return std::make_unique<HashedBagOfLemmasEmbedder>(stop, config.embedder_dim);
  }
  return std::make_unique<RemoteEmbedder>(open_channel(config.embedder.kind, config.embedder.endpoint),
                                          config.embedder_dim);
}

std::unique_ptr<GeneratorBackend> make_generator(const PipelineConfig& config) {
  if (config.generator.kind == BackendKind::kMock) {
    if (config.generator_fixture.empty()) throw ConfigError("mock generator needs generator_fixture");
    return std::make_unique<MockGenerator>(MockGenerator::load(config.generator_fixture));
  }
  return std::make_unique<RemoteGenerator>(open_channel(config.generator.kind, config.generator.endpoint));
}

std::unique_ptr<Scorer> make_scorer(const PipelineConfig& config, const StopWordList& stop, const SynonymLexicon& lex) {
  if (config.scorer.kind == BackendKind::kMock) {
    if (config.model.empty()) return std::make_unique<ConstantScorer>(0.5);
    return std::make_unique<LogisticScorer>(LogisticModel::load(config.model), stop, lex);
  }
  return std::make_unique<RemoteScorer>(open_channel(config.scorer.kind, config.scorer.endpoint));
}

Pipeline::Pipeline(PipelineConfig config, const std::vector<Question>& fallback_idf_corpus)
    : config_(std::move(config)) {
  config_.validate();
  stop_ = load_stop_words(config_);
  lex_ = load_lexicon(config_);
  if (!config_.idf.empty()) {
    idf_ = std::make_unique<IdfTable>(IdfTable::load(config_.idf));
  } else if (!config_.dataset.empty()) {
    std::vector<Question> corpus;
    for (auto& rec : load_dataset(config_.dataset)) corpus.push_back(std::move(rec.question));
    idf_ = std::make_unique<IdfTable>(build_idf(corpus, stop_));
  } else if (!fallback_idf_corpus.empty()) {
    idf_ = std::make_unique<IdfTable>(build_idf(fallback_idf_corpus, stop_));
  } else {
    throw ConfigError("pipeline needs an idf table, a dataset, or input questions to build one");
  }
  if (!config_.dictionary.empty()) index_ = build_index(config_.dictionary);
  rules_ = load_rules_or_default(config_);
  embedder_ = make_embedder(config_, stop_);
  generator_ = make_generator(config_);
  scorer_ = make_scorer(config_, stop_, lex_);
}

QuestionTrace Pipeline::run_one(const Question& question) const {
  QuestionTrace t;
  t.keywords = extract_keywords(question, *idf_, config_.m, stop_);
  t.rewritten = rewrite(question, rules_);
  t.knowledge = retrieve_knowledge(question, t.keywords, index_, *embedder_);
  t.prompt = build_prompt(t.knowledge, t.rewritten, config_.markers);
  t.generated = generate_candidates(*generator_, t.prompt, config_.beam_width, config_.max_answer_tokens);
  t.retained = retain_top(dedup(t.generated, stop_, lex_), config_.retain);
  t.ranked = rank_answers(question, t.retained, *scorer_, config_.final_count);
  return t;
}

PipelineResult Pipeline::run(const std::vector<Question>& questions) const {
  PipelineResult result;
  result.predictions.resize(questions.size());
  std::vector<std::optional<std::string>> failures(questions.size());

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < questions.size(); i = next++) {
      result.predictions[i].question_id = questions[i].id;
      try {
        for (auto& r : run_one(questions[i]).ranked) result.predictions[i].ranked_answers.push_back(std::move(r.answer));
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  std::size_t degree = config_.workers > 0 ? static_cast<std::size_t>(config_.workers)
                                           : std::max(1u, std::thread::hardware_concurrency());
  degree = std::min(degree, std::max<std::size_t>(questions.size(), 1));
  if (degree <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < degree; ++w) pool.emplace_back(work);
  }
  for (std::size_t i = 0; i < questions.size(); ++i) {
    if (failures[i]) result.errors.push_back({questions[i].id, *failures[i]});
  }
  return result;
}

PipelineResult run_pipeline(const PipelineConfig& config, const std::vector<Question>& questions) {
  return Pipeline(config, questions).run(questions);
}

}  // namespace gencqa
