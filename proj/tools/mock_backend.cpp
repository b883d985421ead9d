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

// Line-protocol backend used by tests and demos: answers generator, scorer
// or embedder requests from fixtures, over stdio or a Unix socket.

#include <sys/socket.h>
#include <sys/un.h>
#include <unistd.h>

#include <cstring>
#include <iostream>
#include <istream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gencqa/generate.hpp"
#include "gencqa/rank.hpp"
#include "gencqa/retrieve.hpp"

namespace {

using nlohmann::json;

struct Handlers {
  std::optional<gencqa::MockGenerator> generator;
  std::unique_ptr<gencqa::Scorer> scorer;
  std::unique_ptr<gencqa::Embedder> embedder;

  std::string handle(const std::string& line) {
    json req;
    try {
      req = json::parse(line);
    } catch (const json::exception&) {
      return json{{"error", "malformed request"}}.dump();
    }
    try {
      if (generator) {
        gencqa::Prompt prompt;
        prompt.text = req.at("prompt").get<std::string>();
        return gencqa::candidates_to_json(
                   generator->request(prompt, req.at("beam_width").get<int>(), req.at("max_tokens").get<int>()))
            .dump();
      }
      if (scorer) {
        return json{{"scores", scorer->score(req.at("question").get<std::string>(),
                                             req.at("answers").get<std::vector<std::string>>())}}
            .dump();
      }
      return json{{"vectors", embedder->embed_batch(req.at("texts").get<std::vector<std::string>>())}}.dump();
    } catch (const std::exception& e) {
      return json{{"error", e.what()}}.dump();
    }
  }
};

void serve_stream(Handlers& h, std::istream& in, std::ostream& out) {
  std::string line;
  while (std::getline(in, line)) {
    out << h.handle(line) << '\n' << std::flush;
  }
}

int serve_socket(Handlers& h, const std::string& path) {
  int fd = ::socket(AF_UNIX, SOCK_STREAM, 0);
  sockaddr_un addr{};
  addr.sun_family = AF_UNIX;
  std::strncpy(addr.sun_path, path.c_str(), sizeof addr.sun_path - 1);
  ::unlink(path.c_str());
  if (::bind(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(fd, 4) != 0) {
    std::cerr << "cannot listen on " << path << ": " << std::strerror(errno) << "\n";
    return 3;
  }
  for (;;) {
    int client = ::accept(fd, nullptr, nullptr);
    if (client < 0) continue;
    std::string buffer;
    char chunk[4096];
    for (;;) {
      const ssize_t n = ::read(client, chunk, sizeof chunk);
      if (n <= 0) break;
      buffer.append(chunk, static_cast<std::size_t>(n));
      for (auto nl = buffer.find('\n'); nl != std::string::npos; nl = buffer.find('\n')) {
        const std::string reply = h.handle(buffer.substr(0, nl)) + "\n";
        buffer.erase(0, nl + 1);
        if (::write(client, reply.data(), reply.size()) < 0) break;
      }
    }
    ::close(client);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gencqa mock backend"};
  app.require_subcommand(1);
  std::string socket_path;
  app.add_option("--socket", socket_path, "serve on this Unix socket instead of stdio");

  std::string fixture;
  auto* gen = app.add_subcommand("generator", "canned candidates from a fixture");
  gen->add_option("--fixture", fixture)->required();

  std::string model;
  double constant = 0.5;
  auto* sc = app.add_subcommand("scorer", "logistic model or constant plausibility");
  sc->add_option("--model", model);
  sc->add_option("--constant", constant);

  std::size_t dim = gencqa::HashedBagOfLemmasEmbedder::kDefaultDim;
  auto* em = app.add_subcommand("embedder", "hashed bag-of-lemmas embeddings");
  em->add_option("--dim", dim);

  CLI11_PARSE(app, argc, argv);

  Handlers h;
  try {
    if (gen->parsed()) {
      h.generator = gencqa::MockGenerator::load(fixture);
    } else if (sc->parsed()) {
      if (model.empty()) {
        h.scorer = std::make_unique<gencqa::ConstantScorer>(constant);
      } else {
        h.scorer = std::make_unique<gencqa::LogisticScorer>(gencqa::LogisticModel::load(model),
                                                            gencqa::StopWordList::english(), gencqa::SynonymLexicon{});
      }
    } else {
      h.embedder = std::make_unique<gencqa::HashedBagOfLemmasEmbedder>(gencqa::StopWordList::english(), dim);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (!socket_path.empty()) return serve_socket(h, socket_path);
  serve_stream(h, std::cin, std::cout);
  return 0;
}
