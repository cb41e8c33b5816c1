// Copyright 2026 The hanabi-adhoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HANABI_EXTERNAL_AGENT_HPP_
#define HANABI_EXTERNAL_AGENT_HPP_

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "hanabi/agent.hpp"
#include "hanabi/encoding.hpp"

namespace hanabi {

inline constexpr int kProtocolVersion = 1;
inline constexpr int kDefaultExternalTimeoutMs = 10000;

// Byte-stream transport carrying one JSON document per line.
class LineChannel {
 public:
  virtual ~LineChannel() = default;
  virtual void WriteLine(const std::string& line) = 0;
  // Returns the next line without its terminator, or nullopt on timeout/EOF.
  virtual std::optional<std::string> ReadLine(int timeout_ms) = 0;
};

// Runs `command` under /bin/sh with stdin/stdout pipes.
class SubprocessChannel : public LineChannel {
 public:
  explicit SubprocessChannel(const std::string& command) {
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      throw ProtocolViolationError("pipe() failed for: " + command);
    pid_ = fork();
    if (pid_ < 0) throw ProtocolViolationError("fork() failed for: " + command);
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    write_fd_ = to_child[1];
    read_fd_ = from_child[0];
  }

  ~SubprocessChannel() override {
    if (write_fd_ >= 0) close(write_fd_);
    if (read_fd_ >= 0) close(read_fd_);
    if (pid_ > 0) {
      int status = 0;
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGTERM);
        waitpid(pid_, &status, 0);
      }
    }
  }

  SubprocessChannel(const SubprocessChannel&) = delete;
  SubprocessChannel& operator=(const SubprocessChannel&) = delete;

  void WriteLine(const std::string& line) override {
    std::string out = line + "\n";
    size_t off = 0;
    while (off < out.size()) {
      const ssize_t n = write(write_fd_, out.data() + off, out.size() - off);
      if (n <= 0) throw ProtocolViolationError("external agent pipe closed on write");
      off += static_cast<size_t>(n);
    }
  }

  std::optional<std::string> ReadLine(int timeout_ms) override {
    while (true) {
      if (const auto pos = buffer_.find('\n'); pos != std::string::npos) {
        std::string line = buffer_.substr(0, pos);
        buffer_.erase(0, pos + 1);
        return line;
      }
      pollfd pfd{read_fd_, POLLIN, 0};
      const int ready = poll(&pfd, 1, timeout_ms);
      if (ready <= 0) return std::nullopt;  // timeout or error
      char chunk[4096];
      const ssize_t n = read(read_fd_, chunk, sizeof chunk);
      if (n <= 0) return std::nullopt;  // EOF
      buffer_.append(chunk, static_cast<size_t>(n));
    }
  }

 private:
  pid_t pid_ = -1;
  int write_fd_ = -1;
  int read_fd_ = -1;
  std::string buffer_;
};

// Protocol client for an opaque decision maker on the far side of a
// LineChannel. Handshake once per connection:
//   {"protocol":1,"num_players":P,"hand_size":H,"action_space":A}
// then one request per turn:
//   {"obs": <canonical observation>}  ->  {"action": <int>}
// Any timeout, decode failure, or illegal action is a protocol violation.
class ExternalAgent : public Agent {
 public:
  ExternalAgent(std::string id, std::unique_ptr<LineChannel> channel,
                int timeout_ms = kDefaultExternalTimeoutMs)
      : id_(std::move(id)), channel_(std::move(channel)), timeout_ms_(timeout_ms) {}

  const std::string& Id() const override { return id_; }

  Move Decide(const Observation& obs, Rng&) override {
    EnsureHandshake(obs);
    nlohmann::json request;
    request["obs"] = CanonicalObservationJson(obs);
    channel_->WriteLine(request.dump());
    const auto line = channel_->ReadLine(timeout_ms_);
    if (!line)
      throw ProtocolViolationError(id_ + ": no response within " +
                                   std::to_string(timeout_ms_) + "ms");
    int action = -1;
    try {
      action = nlohmann::json::parse(*line).at("action").get<int>();
    } catch (const nlohmann::json::exception& e) {
      throw ProtocolViolationError(id_ + ": undecodable response: " + *line);
    }
    Move move;
    try {
      move = MoveFromActionIndex(action, obs.viewer, obs.num_players, obs.hand_size);
    } catch (const EncodingError&) {
      throw ProtocolViolationError(id_ + ": action out of range: " + std::to_string(action));
    }
    if (std::find(obs.legal_moves.begin(), obs.legal_moves.end(), move) ==
        obs.legal_moves.end())
      throw ProtocolViolationError(id_ + ": illegal action " + std::to_string(action) +
                                   " (" + move.ToString() + ")");
    return move;
  }

 private:
  void EnsureHandshake(const Observation& obs) {
    if (handshook_) {
      if (obs.num_players != num_players_ || obs.hand_size != hand_size_)
        throw IncompatibleAgentsError(id_ + ": handle bound to " +
                                      std::to_string(num_players_) + " players");
      return;
    }
    num_players_ = obs.num_players;
    hand_size_ = obs.hand_size;
    nlohmann::json hello;
    hello["protocol"] = kProtocolVersion;
    hello["num_players"] = num_players_;
    hello["hand_size"] = hand_size_;
    hello["action_space"] = ActionSpaceSize(num_players_, hand_size_);
    channel_->WriteLine(hello.dump());
    handshook_ = true;
  }

  std::string id_;
  std::unique_ptr<LineChannel> channel_;
  int timeout_ms_;
  bool handshook_ = false;
  int num_players_ = 0;
  int hand_size_ = 0;
};

// Resolves an agent token:
//   builtin name            internal, outer, vdb, piers, flawed, iggi
//   file:<path>             JSON rule composition, see LoadAgentSpecFile
//   ext:<name>=<command>    external process speaking the line protocol
//   ext:<command>           shorthand; id is the command itself
// For ext:<name>=..., the environment variable HANABI_EXT_<NAME> (upper
// case) overrides the configured command. HANABI_EXT_TIMEOUT_MS overrides
// the per-response timeout.
inline std::unique_ptr<Agent> MakeAgent(const std::string& token,
                                        int external_timeout_ms = kDefaultExternalTimeoutMs) {
  if (const char* timeout_env = std::getenv("HANABI_EXT_TIMEOUT_MS"))
    external_timeout_ms = std::atoi(timeout_env);
  if (token.rfind("file:", 0) == 0)
    return std::make_unique<RuleAgent>(LoadAgentSpecFile(token.substr(5)));
  if (token.rfind("ext:", 0) == 0) {
    std::string rest = token.substr(4);
    std::string id = rest;
    std::string command = rest;
    if (const auto eq = rest.find('='); eq != std::string::npos) {
      id = rest.substr(0, eq);
      command = rest.substr(eq + 1);
      std::string env_name = "HANABI_EXT_";
      for (char c : id) env_name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (const char* override_cmd = std::getenv(env_name.c_str())) command = override_cmd;
    }
    if (command.empty()) throw InvalidConfigError("empty external agent command: " + token);
    return std::make_unique<ExternalAgent>(
        id, std::make_unique<SubprocessChannel>(command), external_timeout_ms);
  }
  return std::make_unique<RuleAgent>(BuiltinAgentSpec(token));
}

inline bool IsExternalAgentToken(const std::string& token) {
  return token.rfind("ext:", 0) == 0;
}

}  // namespace hanabi

#endif  // HANABI_EXTERNAL_AGENT_HPP_
