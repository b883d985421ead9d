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

#include "gencqa/generate.hpp"

#include <algorithm>
#include <cmath>

#include "gencqa/error.hpp"
#include "gencqa/io.hpp"
#include "gencqa/text.hpp"

namespace gencqa {

Prompt build_prompt(const KnowledgeSet& knowledge, const RewrittenQuestion& rq, const Markers& markers) {
  const auto all = markers.all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].empty()) throw ConfigError("prompt markers must be non-empty");
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) throw ConfigError("prompt markers must be pairwise distinct");
    }
  }
  Prompt p;
  p.markers = markers;
  p.text = markers.bos + " " + knowledge.rendered + " " + markers.sep + " " + rq.text + " " + markers.mask + " " +
           markers.eos;
  return p;
}

double candidate_confidence(const RawCandidate& raw) {
  if (raw.token_logprobs.empty()) throw BackendError("candidate \"" + raw.text + "\" has no token log-probabilities");
  double sum = 0.0;
  for (double lp : raw.token_logprobs) {
    if (!(lp <= 0.0)) {
      throw BackendError("candidate \"" + raw.text + "\" has invalid log-probability " + std::to_string(lp));
    }
    sum += lp;
  }
  return sum;
}

std::vector<RawCandidate> parse_candidates(const nlohmann::json& reply, const std::string& backend) {
  if (!reply.is_object() || !reply.contains("candidates") || !reply.at("candidates").is_array()) {
    throw BackendError(backend + ": response lacks a \"candidates\" array");
  }
  std::vector<RawCandidate> out;
  for (const auto& c : reply.at("candidates")) {
    if (!c.is_object() || !c.contains("text") || !c.at("text").is_string() || !c.contains("token_logprobs") ||
        !c.at("token_logprobs").is_array()) {
      throw BackendError(backend + ": malformed candidate record");
    }
    RawCandidate raw;
    raw.text = c.at("text").get<std::string>();
    for (const auto& lp : c.at("token_logprobs")) {
      if (!lp.is_number()) throw BackendError(backend + ": token_logprobs must be numbers");
      raw.token_logprobs.push_back(lp.get<double>());
    }
    out.push_back(std::move(raw));
  }
  return out;
}

nlohmann::json candidates_to_json(const std::vector<RawCandidate>& candidates) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : candidates) arr.push_back({{"text", c.text}, {"token_logprobs", c.token_logprobs}});
  return {{"candidates", arr}};
}

MockGenerator MockGenerator::load(const std::filesystem::path& fixture) {
  std::vector<Rule> rules;
  for_each_record(fixture, [&](const Json& j, std::size_t) {
    Rule rule;
    rule.match = j.at("match").get<std::string>();
    try {
      rule.candidates = parse_candidates(j, "mock fixture");
    } catch (const BackendError& e) {
      throw DataError(e.what());
    }
    rules.push_back(std::move(rule));
  });
  return MockGenerator(std::move(rules));
}

std::vector<RawCandidate> MockGenerator::request(const Prompt& prompt, int beam_width, int /*max_answer_tokens*/) {
  for (const auto& rule : rules_) {
    if (rule.match == "*" || prompt.text.find(rule.match) != std::string::npos) {
      const auto n = std::min<std::size_t>(rule.candidates.size(), static_cast<std::size_t>(beam_width));
      return {rule.candidates.begin(), rule.candidates.begin() + static_cast<std::ptrdiff_t>(n)};
    }
  }
  return {};
}

std::vector<RawCandidate> RemoteGenerator::request(const Prompt& prompt, int beam_width, int max_answer_tokens) {
  const auto reply =
      channel_->exchange_json({{"prompt", prompt.text}, {"beam_width", beam_width}, {"max_tokens", max_answer_tokens}});
  return parse_candidates(reply, name());
}

namespace {

std::string strip_markers(std::string text, const Markers& markers) {
  for (const auto& m : markers.all()) {
    for (auto pos = text.find(m); pos != std::string::npos; pos = text.find(m)) text.replace(pos, m.size(), " ");
  }
  std::string collapsed;
  for (char c : trim(text)) {
    if (c == ' ' && !collapsed.empty() && collapsed.back() == ' ') continue;
    collapsed.push_back(c);
  }
  return collapsed;
}

}  // namespace

std::vector<Candidate> generate_candidates(GeneratorBackend& backend, const Prompt& prompt, int beam_width,
                                           int max_answer_tokens) {
  if (beam_width < 1) throw ConfigError("beam_width must be >= 1");
  if (max_answer_tokens < 1) throw ConfigError("max_answer_tokens must be >= 1");
  std::vector<RawCandidate> raw;
  try {
    raw = backend.request(prompt, beam_width, max_answer_tokens);
  } catch (const BackendError& e) {
    throw BackendError(backend.name() + ": " + e.what());
  } catch (const std::exception& e) {
    throw BackendError(backend.name() + ": " + e.what());
  }
  if (raw.size() > static_cast<std::size_t>(beam_width)) {
    throw BackendError(backend.name() + ": returned " + std::to_string(raw.size()) + " candidates for beam width " +
                       std::to_string(beam_width));
  }
  std::vector<Candidate> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    double confidence = 0.0;
    try {
      confidence = candidate_confidence(r);
    } catch (const BackendError& e) {
      throw BackendError(backend.name() + ": " + e.what());
    }
    std::string text = strip_markers(r.text, prompt.markers);
    if (text.empty()) continue;
    out.push_back({std::move(text), confidence});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) { return a.confidence > b.confidence; });
  return out;
}

}  // namespace gencqa
