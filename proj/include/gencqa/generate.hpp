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
#include <memory>
#include <string>
#include <vector>

#include "gencqa/channel.hpp"
#include "gencqa/retrieve.hpp"
#include "gencqa/rewrite.hpp"

namespace gencqa {

struct Markers {
  std::string bos = "<BOS>";
  std::string sep = "<SEP>";
  std::string mask = "<MASK>";
  std::string eos = "<EOS>";

  std::vector<std::string> all() const { return {bos, sep, mask, eos}; }
};

struct Prompt {
  std::string text;
  Markers markers;
};

// "<BOS> k_c <SEP> q <MASK> <EOS>"; an empty k_c still keeps both spaces.
Prompt build_prompt(const KnowledgeSet& knowledge, const RewrittenQuestion& rq, const Markers& markers = {});

struct RawCandidate {
  std::string text;
  std::vector<double> token_logprobs;
};

struct Candidate {
  std::string text;
  double confidence = 0.0;  // sum of token log-probabilities

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

double candidate_confidence(const RawCandidate& raw);

class GeneratorBackend {
 public:
  virtual ~GeneratorBackend() = default;
  virtual std::string name() const = 0;
  virtual std::vector<RawCandidate> request(const Prompt& prompt, int beam_width, int max_answer_tokens) = 0;
};

// Fixture-driven generator: the first rule whose `match` is a substring of
// the prompt supplies canned candidates; "*" matches every prompt.
class MockGenerator final : public GeneratorBackend {
 public:
  struct Rule {
    std::string match;
    std::vector<RawCandidate> candidates;
  };

  explicit MockGenerator(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  // Line records {"match": string, "candidates": [{"text", "token_logprobs"}]}.
  static MockGenerator load(const std::filesystem::path& fixture);

  std::string name() const override { return "mock-generator"; }
  std::vector<RawCandidate> request(const Prompt& prompt, int beam_width, int max_answer_tokens) override;

 private:
  std::vector<Rule> rules_;
};

// {"prompt","beam_width","max_tokens"} -> {"candidates":[{"text","token_logprobs"}]}.
class RemoteGenerator final : public GeneratorBackend {
 public:
  explicit RemoteGenerator(std::unique_ptr<LineChannel> channel) : channel_(std::move(channel)) {}

  std::string name() const override { return channel_->describe(); }
  std::vector<RawCandidate> request(const Prompt& prompt, int beam_width, int max_answer_tokens) override;

 private:
  std::unique_ptr<LineChannel> channel_;
};

std::vector<RawCandidate> parse_candidates(const nlohmann::json& reply, const std::string& backend);
nlohmann::json candidates_to_json(const std::vector<RawCandidate>& candidates);

// Sorted by confidence descending, backend order among ties. Marker strings
// are removed from candidate text; candidates left empty are dropped.
std::vector<Candidate> generate_candidates(GeneratorBackend& backend, const Prompt& prompt, int beam_width,
                                           int max_answer_tokens);

}  // namespace gencqa
