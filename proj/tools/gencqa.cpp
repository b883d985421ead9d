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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencqa/dedup.hpp"
#include "gencqa/error.hpp"
#include "gencqa/eval.hpp"
#include "gencqa/io.hpp"
#include "gencqa/keywords.hpp"
#include "gencqa/pipeline.hpp"
#include "gencqa/rank.hpp"
#include "gencqa/retrieve.hpp"
#include "gencqa/rewrite.hpp"
#include "gencqa/text.hpp"

namespace {

using gencqa::Json;

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kBackend = 3 };

// Writes line records to `path`, or stdout when it is empty.
void emit(const std::vector<Json>& records, const std::string& path) {
  if (path.empty()) {
    for (const auto& r : records) std::cout << r.dump() << '\n';
    std::cout.flush();
    return;
  }
  gencqa::write_records(path, records);
}

std::vector<gencqa::Question> load_questions(const std::string& path) {
  std::vector<gencqa::Question> out;
  for (auto& rec : gencqa::load_dataset(path)) out.push_back(std::move(rec.question));
  return out;
}

std::map<std::string, std::string> question_text_by_id(const std::string& path) {
  std::map<std::string, std::string> out;
  for (auto& q : load_questions(path)) out.emplace(q.id, q.text);
  return out;
}

std::vector<gencqa::Candidate> candidates_from(const Json& record) {
  std::vector<gencqa::Candidate> out;
  for (const auto& c : record.at("candidates")) {
    out.push_back({c.at("text").get<std::string>(), c.at("confidence").get<double>()});
  }
  return out;
}

Json candidates_record(const std::string& id, const std::vector<gencqa::Candidate>& candidates) {
  Json arr = Json::array();
  for (const auto& c : candidates) arr.push_back({{"text", c.text}, {"confidence", c.confidence}});
  return {{"id", id}, {"candidates", arr}};
}

// Shared options: a config file supplying defaults, and a seed override.
struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;

  gencqa::PipelineConfig config() const {
    gencqa::PipelineConfig c;
    if (!config_path.empty()) {
      c = gencqa::load_config(config_path);
    } else {
      gencqa::apply_environment_overrides(c);
    }
    if (seed) c.seed = *seed;
    return c;
  }
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--config", common.config_path, "pipeline config file (flat JSON object)");
  sub->add_option("--seed", common.seed, "override the configured seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate-then-rank commonsense QA toolkit"};
  app.require_subcommand(1);

  Common common;
  std::string in_path;
  std::string out_path;
  std::string dataset_path;
  std::string idf_path;
  std::string stop_path;
  std::string lexicon_path;
  std::string dump_path;
  std::string keywords_path;
  std::string rules_path;
  std::string corpus_path;
  std::string model_path;
  std::string predictions_path;
  std::string questions_path;
  std::string errors_path;
  std::string trace_path;
  std::string policy_name = "exact-normalized";
  std::vector<std::string> scheme_names;
  std::optional<int> m_opt;
  std::optional<int> n_opt;
  std::optional<int> retain_opt;
  std::optional<int> final_opt;
  std::optional<int> beam_opt;
  double learning_rate = 0.5;
  int epochs = 200;

  const auto stop_flag = [&](CLI::App* s) { s->add_option("--stop-words", stop_path, "stop-word file"); };
  const auto lexicon_flag = [&](CLI::App* s) { s->add_option("--lexicon", lexicon_path, "synonym lexicon file"); };

  auto* build_idf = app.add_subcommand("build-idf", "IDF table from a question corpus");
  build_idf->add_option("--dataset", dataset_path)->required();
  build_idf->add_option("--out", out_path)->required();
  stop_flag(build_idf);
  add_common(build_idf, common);

  auto* extract = app.add_subcommand("extract-keywords", "top-m TF-IDF keywords per question");
  extract->add_option("--in", in_path)->required();
  extract->add_option("--idf", idf_path)->required();
  extract->add_option("--m", m_opt);
  extract->add_option("--out", out_path);
  stop_flag(extract);
  add_common(extract, common);

  auto* rewrite_cmd = app.add_subcommand("rewrite", "Cloze-style question rewriting");
  rewrite_cmd->add_option("--in", in_path)->required();
  rewrite_cmd->add_option("--rules", rules_path);
  rewrite_cmd->add_option("--out", out_path);
  add_common(rewrite_cmd, common);

  auto* build_index_cmd = app.add_subcommand("build-index", "validate and merge a dictionary dump");
  build_index_cmd->add_option("--dump", dump_path)->required();
  build_index_cmd->add_option("--out", out_path);
  add_common(build_index_cmd, common);

  auto* retrieve_cmd = app.add_subcommand("retrieve", "knowledge sets and prompts per question");
  retrieve_cmd->add_option("--in", in_path)->required();
  retrieve_cmd->add_option("--keywords", keywords_path)->required();
  retrieve_cmd->add_option("--dump", dump_path)->required();
  retrieve_cmd->add_option("--rules", rules_path);
  retrieve_cmd->add_option("--out", out_path);
  stop_flag(retrieve_cmd);
  add_common(retrieve_cmd, common);

  auto* generate_cmd = app.add_subcommand("generate", "candidates from the configured generator backend");
  generate_cmd->add_option("--in", in_path, "records with \"id\" and \"prompt\"")->required();
  generate_cmd->add_option("--beam-width", beam_opt);
  generate_cmd->add_option("--out", out_path);
  add_common(generate_cmd, common);

  auto* dedup_cmd = app.add_subcommand("dedup", "dictionary-based deduplication and retain-top");
  dedup_cmd->add_option("--in", in_path)->required();
  dedup_cmd->add_option("--retain", retain_opt);
  dedup_cmd->add_option("--out", out_path);
  stop_flag(dedup_cmd);
  lexicon_flag(dedup_cmd);
  add_common(dedup_cmd, common);

  auto* corpus_cmd = app.add_subcommand("build-ranker-corpus", "positive/negative plausibility pairs");
  corpus_cmd->add_option("--dataset", dataset_path)->required();
  corpus_cmd->add_option("--n", n_opt);
  corpus_cmd->add_option("--out", out_path);
  stop_flag(corpus_cmd);
  lexicon_flag(corpus_cmd);
  add_common(corpus_cmd, common);

  auto* train_cmd = app.add_subcommand("train-scorer", "train the reference logistic scorer");
  train_cmd->add_option("--corpus", corpus_path)->required();
  train_cmd->add_option("--out", out_path)->required();
  train_cmd->add_option("--lr", learning_rate);
  train_cmd->add_option("--epochs", epochs);
  train_cmd->add_option("--trace", trace_path, "write the per-epoch loss trace here");
  stop_flag(train_cmd);
  lexicon_flag(train_cmd);
  add_common(train_cmd, common);

  auto* rank_cmd = app.add_subcommand("rank", "plausibility ranking into predictions");
  rank_cmd->add_option("--in", in_path, "candidate records")->required();
  rank_cmd->add_option("--questions", questions_path)->required();
  rank_cmd->add_option("--model", model_path);
  rank_cmd->add_option("--final-count", final_opt);
  rank_cmd->add_option("--out", out_path);
  stop_flag(rank_cmd);
  lexicon_flag(rank_cmd);
  add_common(rank_cmd, common);

  auto* eval_cmd = app.add_subcommand("evaluate", "weighted accuracy under Ans@k / Inc@k");
  eval_cmd->add_option("--predictions", predictions_path)->required();
  eval_cmd->add_option("--dataset", dataset_path)->required();
  eval_cmd->add_option("--policy", policy_name)->check(CLI::IsMember({"exact-normalized", "synonym-augmented"}));
  eval_cmd->add_option("--scheme", scheme_names, "e.g. Ans@3, Inc@1 (default: standard suite)");
  eval_cmd->add_option("--out", out_path);
  stop_flag(eval_cmd);
  lexicon_flag(eval_cmd);
  add_common(eval_cmd, common);

  auto* pipeline_cmd = app.add_subcommand("pipeline", "run every stage end to end");
  pipeline_cmd->add_option("--questions", questions_path)->required();
  pipeline_cmd->add_option("--out", out_path);
  pipeline_cmd->add_option("--errors", errors_path, "per-question error log");
  add_common(pipeline_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    gencqa::PipelineConfig config = common.config();
    if (!stop_path.empty()) config.stop_words = stop_path;
    if (!lexicon_path.empty()) config.lexicon = lexicon_path;
    if (!rules_path.empty()) config.rules = rules_path;
    if (!model_path.empty()) config.model = model_path;
    if (m_opt) config.m = *m_opt;
    if (n_opt) config.n = *n_opt;
    if (retain_opt) config.retain = *retain_opt;
    if (final_opt) config.final_count = *final_opt;
    if (beam_opt) config.beam_width = *beam_opt;
    const auto stop = gencqa::load_stop_words(config);

    if (build_idf->parsed()) {
      gencqa::build_idf(load_questions(dataset_path), stop).save(out_path);
    } else if (extract->parsed()) {
      const auto idf = gencqa::IdfTable::load(idf_path);
      std::vector<Json> out;
      for (const auto& q : load_questions(in_path)) {
        Json kws = Json::array();
        for (const auto& k : gencqa::extract_keywords(q, idf, config.m, stop).keywords) {
          kws.push_back({{"token", k.token}, {"score", k.score}});
        }
        out.push_back({{"id", q.id}, {"keywords", kws}});
      }
      emit(out, out_path);
    } else if (rewrite_cmd->parsed()) {
      const auto rules = gencqa::load_rules_or_default(config);
      std::vector<Json> out;
      for (const auto& q : load_questions(in_path)) {
        const auto rq = gencqa::rewrite(q, rules);
        out.push_back({{"id", q.id},
                       {"rewritten", rq.text},
                       {"matched_prefix", rq.matched_prefix ? Json(*rq.matched_prefix) : Json(nullptr)},
                       {"content", rq.content}});
      }
      emit(out, out_path);
    } else if (build_index_cmd->parsed()) {
      std::map<std::string, std::vector<std::string>> merged;
      const auto index = gencqa::build_index(dump_path);
      gencqa::for_each_record(dump_path, [&](const Json& j, std::size_t) {
        const std::string lemma = gencqa::normalized_key(j.at("lemma").get<std::string>());
        if (merged.count(lemma) == 0) merged[lemma] = *index.lookup(lemma);
      });
      std::vector<Json> out;
      for (const auto& [lemma, defs] : merged) out.push_back({{"lemma", lemma}, {"definitions", defs}});
      emit(out, out_path);
      std::cerr << "indexed " << index.size() << " lemmas\n";
    } else if (retrieve_cmd->parsed()) {
      const auto index = gencqa::build_index(dump_path);
      const auto rules = gencqa::load_rules_or_default(config);
      const auto embedder = gencqa::make_embedder(config, stop);
      std::map<std::string, gencqa::KeywordList> keywords;
      gencqa::for_each_record(keywords_path, [&](const Json& j, std::size_t) {
        gencqa::KeywordList list;
        for (const auto& k : j.at("keywords")) {
          list.keywords.push_back({k.at("token").get<std::string>(), k.at("score").get<double>()});
        }
        keywords[j.at("id").get<std::string>()] = std::move(list);
      });
      std::vector<Json> out;
      for (const auto& q : load_questions(in_path)) {
        auto it = keywords.find(q.id);
        if (it == keywords.end()) throw gencqa::DataError("no keywords for question " + q.id);
        const auto ks = gencqa::retrieve_knowledge(q, it->second, index, *embedder);
        const auto rq = gencqa::rewrite(q, rules);
        Json items = Json::array();
        for (const auto& item : ks.items) {
          items.push_back({{"keyword", item.keyword}, {"definition", item.definition}, {"score", item.score}});
        }
        out.push_back({{"id", q.id},
                       {"knowledge", items},
                       {"rendered", ks.rendered},
                       {"rewritten", rq.text},
                       {"prompt", gencqa::build_prompt(ks, rq, config.markers).text}});
      }
      emit(out, out_path);
    } else if (generate_cmd->parsed()) {
      config.validate();
      auto backend = gencqa::make_generator(config);
      std::vector<Json> out;
      gencqa::for_each_record(in_path, [&](const Json& j, std::size_t) {
        gencqa::Prompt prompt;
        prompt.text = j.at("prompt").get<std::string>();
        prompt.markers = config.markers;
        out.push_back(candidates_record(
            j.at("id").get<std::string>(),
            gencqa::generate_candidates(*backend, prompt, config.beam_width, config.max_answer_tokens)));
      });
      emit(out, out_path);
    } else if (dedup_cmd->parsed()) {
      const auto lex = gencqa::load_lexicon(config);
      std::vector<Json> out;
      gencqa::for_each_record(in_path, [&](const Json& j, std::size_t) {
        out.push_back(candidates_record(
            j.at("id").get<std::string>(),
            gencqa::retain_top(gencqa::dedup(candidates_from(j), stop, lex), config.retain)));
      });
      emit(out, out_path);
    } else if (corpus_cmd->parsed()) {
      const auto lex = gencqa::load_lexicon(config);
      const auto corpus = gencqa::build_ranker_corpus(gencqa::load_dataset(dataset_path), config.n, config.seed, stop, lex);
      for (const auto& id : corpus.skipped) std::cerr << "warning: negative pool exhausted, skipped " << id << "\n";
      std::vector<Json> out;
      for (const auto& r : corpus.instances) {
        out.push_back({{"id", r.question_id}, {"question", r.question_text}, {"answer", r.answer}, {"label", r.label}});
      }
      emit(out, out_path);
      std::cerr << corpus.positives() << " positives, " << corpus.negatives() << " negatives\n";
    } else if (train_cmd->parsed()) {
      const auto lex = gencqa::load_lexicon(config);
      const auto result = gencqa::train_logistic(gencqa::load_ranker_corpus(corpus_path), learning_rate, epochs,
                                                 config.seed, stop, lex);
      result.model.save(out_path);
      if (!trace_path.empty()) {
        std::vector<Json> trace;
        for (std::size_t e = 0; e < result.loss_trace.size(); ++e) {
          trace.push_back({{"epoch", e}, {"loss", result.loss_trace[e]}});
        }
        gencqa::write_records(trace_path, trace);
      }
      std::cerr << "final loss " << result.loss_trace.back() << "\n";
    } else if (rank_cmd->parsed()) {
      const auto lex = gencqa::load_lexicon(config);
      const auto scorer = gencqa::make_scorer(config, stop, lex);
      const auto texts = question_text_by_id(questions_path);
      std::vector<Json> out;
      gencqa::for_each_record(in_path, [&](const Json& j, std::size_t) {
        const std::string id = j.at("id").get<std::string>();
        auto it = texts.find(id);
        if (it == texts.end()) throw gencqa::DataError("no question text for " + id);
        gencqa::Prediction p{id, {}};
        for (auto& r : gencqa::rank_answers({id, it->second}, candidates_from(j), *scorer, config.final_count)) {
          p.ranked_answers.push_back(std::move(r.answer));
        }
        out.push_back(gencqa::to_json(p));
      });
      emit(out, out_path);
    } else if (eval_cmd->parsed()) {
      gencqa::MatchPolicy policy = gencqa::MatchPolicy::exact(stop);
      if (policy_name == "synonym-augmented") {
        if (config.lexicon.empty()) throw gencqa::ConfigError("synonym-augmented matching requires --lexicon");
        policy = gencqa::MatchPolicy::synonyms(gencqa::load_lexicon(config), stop);
      }
      std::vector<gencqa::TruncationScheme> schemes;
      for (const auto& s : scheme_names) schemes.push_back(gencqa::parse_scheme(s));
      if (schemes.empty()) schemes = gencqa::standard_schemes();
      std::vector<gencqa::GroundTruthClusters> ground;
      for (auto& rec : gencqa::load_dataset(dataset_path)) ground.push_back(std::move(rec.truth));
      const auto report = gencqa::evaluate(gencqa::load_predictions(predictions_path), ground, schemes, policy);
      std::vector<Json> out;
      out.push_back({{"policy", report.policy}, {"primary", gencqa::kPrimaryMetric}});
      for (const auto& name : report.metrics) out.push_back({{"metric", name}, {"mean", report.per_metric.at(name)}});
      for (const auto& [id, scores] : report.per_question) {
        Json metrics = Json::object();
        for (const auto& name : report.metrics) metrics[name] = scores.at(name);
        out.push_back({{"id", id}, {"metrics", metrics}});
      }
      emit(out, out_path);
    } else if (pipeline_cmd->parsed()) {
      const auto questions = load_questions(questions_path);
      const auto result = gencqa::run_pipeline(config, questions);
      std::vector<Json> out;
      for (const auto& p : result.predictions) out.push_back(gencqa::to_json(p));
      emit(out, out_path);
      std::vector<Json> errors;
      for (const auto& e : result.errors) {
        std::cerr << "question " << e.question_id << ": " << e.message << "\n";
        errors.push_back({{"id", e.question_id}, {"error", e.message}});
      }
      if (!errors_path.empty()) gencqa::write_records(errors_path, errors);
    }
  } catch (const gencqa::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const gencqa::BackendError& e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return kBackend;
  } catch (const gencqa::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kOk;
}
