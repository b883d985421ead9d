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

#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

namespace gencqa {

// Newline-delimited request/response transport to an out-of-process
// backend. One request line in, one response line out. Calls are serialized
// per channel.
class LineChannel {
 public:
  virtual ~LineChannel() = default;

  std::string exchange(const std::string& request_line);
  nlohmann::json exchange_json(const nlohmann::json& request);

  virtual std::string describe() const = 0;

 protected:
  virtual void write_line(const std::string& line) = 0;
  virtual std::string read_line() = 0;

 private:
  std::mutex mutex_;
};

// Runs `command` through /bin/sh and talks over its stdin/stdout.
class SubprocessChannel final : public LineChannel {
 public:
  explicit SubprocessChannel(std::string command);
  ~SubprocessChannel() override;
  SubprocessChannel(const SubprocessChannel&) = delete;
  SubprocessChannel& operator=(const SubprocessChannel&) = delete;

  std::string describe() const override { return "subprocess:" + command_; }

 protected:
  void write_line(const std::string& line) override;
  std::string read_line() override;

 private:
  std::string command_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

// Endpoint forms: "unix:/path/to/socket", "tcp:host:port" or "host:port".
class SocketChannel final : public LineChannel {
 public:
  explicit SocketChannel(std::string endpoint);
  ~SocketChannel() override;
  SocketChannel(const SocketChannel&) = delete;
  SocketChannel& operator=(const SocketChannel&) = delete;

  std::string describe() const override { return "socket:" + endpoint_; }

 protected:
  void write_line(const std::string& line) override;
  std::string read_line() override;

 private:
  std::string endpoint_;
  int fd_ = -1;
  std::string buffer_;
};

enum class BackendKind { kMock, kSubprocess, kSocket };

BackendKind parse_backend_kind(const std::string& kind);
std::string to_string(BackendKind kind);

// For kSubprocess the endpoint is a shell command; for kSocket an address.
std::unique_ptr<LineChannel> open_channel(BackendKind kind, const std::string& endpoint);

}  // namespace gencqa
