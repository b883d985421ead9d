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

#include "gencqa/channel.hpp"

#include <fcntl.h>
#include <netdb.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/un.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "gencqa/error.hpp"

namespace gencqa {
namespace {

void write_all(int fd, const std::string& data, const std::string& who) {
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw BackendError(who + ": write failed: " + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
}

std::string read_until_newline(int fd, std::string& buffer, const std::string& who) {
  for (;;) {
    if (auto nl = buffer.find('\n'); nl != std::string::npos) {
      std::string line = buffer.substr(0, nl);
      buffer.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    char chunk[4096];
    const ssize_t n = ::read(fd, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw BackendError(who + ": read failed: " + std::strerror(errno));
    }
    if (n == 0) throw BackendError(who + ": connection closed before a response line");
    buffer.append(chunk, static_cast<std::size_t>(n));
  }
}

void ignore_sigpipe() {
  static const bool once = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)once;
}

}  // namespace

std::string LineChannel::exchange(const std::string& request_line) {
  std::lock_guard lock(mutex_);
  write_line(request_line);
  return read_line();
}

nlohmann::json LineChannel::exchange_json(const nlohmann::json& request) {
  const std::string reply = exchange(request.dump());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(reply);
  } catch (const nlohmann::json::exception& e) {
    throw BackendError(describe() + ": malformed response: " + e.what());
  }
  if (j.is_object() && j.contains("error")) {
    throw BackendError(describe() + ": backend error: " + j.at("error").dump());
  }
  return j;
}

SubprocessChannel::SubprocessChannel(std::string command) : command_(std::move(command)) {
  ignore_sigpipe();
  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw BackendError(describe() + ": pipe failed");
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw BackendError(describe() + ": pipe failed");
  }
  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw BackendError(describe() + ": fork failed");
  }
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
}

SubprocessChannel::~SubprocessChannel() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(pid_, &status, 0);
  }
}

void SubprocessChannel::write_line(const std::string& line) { write_all(to_child_, line + "\n", describe()); }

std::string SubprocessChannel::read_line() { return read_until_newline(from_child_, buffer_, describe()); }

SocketChannel::SocketChannel(std::string endpoint) : endpoint_(std::move(endpoint)) {
  ignore_sigpipe();
  if (endpoint_.rfind("unix:", 0) == 0) {
    const std::string path = endpoint_.substr(5);
    sockaddr_un addr{};
    if (path.size() >= sizeof addr.sun_path) throw BackendError(describe() + ": socket path too long");
    addr.sun_family = AF_UNIX;
    std::memcpy(addr.sun_path, path.c_str(), path.size() + 1);
    fd_ = ::socket(AF_UNIX, SOCK_STREAM, 0);
    if (fd_ < 0) throw BackendError(describe() + ": socket failed");
    if (::connect(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
      const std::string err = std::strerror(errno);
      ::close(fd_);
      fd_ = -1;
      throw BackendError(describe() + ": connect failed: " + err);
    }
    return;
  }
  std::string address = endpoint_.rfind("tcp:", 0) == 0 ? endpoint_.substr(4) : endpoint_;
  const auto colon = address.rfind(':');
  if (colon == std::string::npos) throw BackendError(describe() + ": expected host:port");
  const std::string host = address.substr(0, colon);
  const std::string port = address.substr(colon + 1);
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  if (::getaddrinfo(host.c_str(), port.c_str(), &hints, &result) != 0) {
    throw BackendError(describe() + ": cannot resolve " + address);
  }
  for (addrinfo* ai = result; ai != nullptr; ai = ai->ai_next) {
    fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
    if (fd_ < 0) continue;
    if (::connect(fd_, ai->ai_addr, ai->ai_addrlen) == 0) break;
    ::close(fd_);
    fd_ = -1;
  }
  ::freeaddrinfo(result);
  if (fd_ < 0) throw BackendError(describe() + ": connect failed");
}

SocketChannel::~SocketChannel() {
  if (fd_ >= 0) ::close(fd_);
}

void SocketChannel::write_line(const std::string& line) { write_all(fd_, line + "\n", describe()); }

std::string SocketChannel::read_line() { return read_until_newline(fd_, buffer_, describe()); }

BackendKind parse_backend_kind(const std::string& kind) {
  if (kind == "mock") return BackendKind::kMock;
  if (kind == "subprocess") return BackendKind::kSubprocess;
  if (kind == "socket") return BackendKind::kSocket;
  throw ConfigError("unknown backend kind \"" + kind + "\" (expected mock, subprocess or socket)");
}

std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::kMock:
      return "mock";
    case BackendKind::kSubprocess:
      return "subprocess";
    case BackendKind::kSocket:
      return "socket";
  }
  return "unknown";
}

std::unique_ptr<LineChannel> open_channel(BackendKind kind, const std::string& endpoint) {
  if (endpoint.empty()) throw ConfigError("backend kind " + to_string(kind) + " requires an endpoint");
  switch (kind) {
    case BackendKind::kSubprocess:
      return std::make_unique<SubprocessChannel>(endpoint);
    case BackendKind::kSocket:
      return std::make_unique<SocketChannel>(endpoint);
    case BackendKind::kMock:
      break;
  }
  throw ConfigError("mock backends do not use a channel");
}

}  // namespace gencqa
