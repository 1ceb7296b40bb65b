//
// Copyright 2026 The NewsBreaker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Line-oriented byte transports for the classifier protocol: a child
// process's standard streams, a TCP connection, or a local socket pair.

#ifndef NEWSBREAKER_TRANSPORT_H_
#define NEWSBREAKER_TRANSPORT_H_

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include <sys/types.h>

namespace newsbreaker {

enum class ReadStatus { kLine, kEof, kTimeout };

class Transport {
 public:
  virtual ~Transport() = default;

  // Reads one '\n'-terminated line (terminator stripped). A negative timeout
  // waits forever.
  virtual ReadStatus ReadLine(std::string& line, std::chrono::milliseconds timeout) = 0;

  // Writes `line` plus '\n'. Throws ProtocolError(kTransport) on failure.
  virtual void WriteLine(std::string_view line) = 0;

  virtual std::string Describe() const = 0;
};

// Transport over a pair of file descriptors.
class FdTransport : public Transport {
 public:
  FdTransport(int read_fd, int write_fd, bool owns_fds, std::string description);
  ~FdTransport() override;

  FdTransport(const FdTransport&) = delete;
  FdTransport& operator=(const FdTransport&) = delete;

  ReadStatus ReadLine(std::string& line, std::chrono::milliseconds timeout) override;
  void WriteLine(std::string_view line) override;
  std::string Describe() const override { return description_; }

  // Closes the write side so the peer sees end of input.
  void CloseWrite();

 protected:
  void CloseAll();

 private:
  int read_fd_;
  int write_fd_;
  bool owns_fds_;
  bool is_socket_;
  std::string buffer_;
  std::string description_;
};

// Runs `command` under /bin/sh -c and talks to its stdin/stdout.
class SubprocessTransport : public FdTransport {
 public:
  static std::unique_ptr<SubprocessTransport> Spawn(const std::string& command);
  ~SubprocessTransport() override;

 private:
  SubprocessTransport(int read_fd, int write_fd, pid_t pid, std::string command);

  pid_t pid_;
};

// Throws ProtocolError(kTransport) if the connection cannot be made.
std::unique_ptr<FdTransport> ConnectTcp(const std::string& host, uint16_t port,
                                        std::chrono::milliseconds timeout);

class TcpListener {
 public:
  // Port 0 picks a free port; see port(). Binds to 127.0.0.1 unless
  // `bind_all` is set.
  explicit TcpListener(uint16_t port, bool bind_all = false);
  ~TcpListener();

  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  uint16_t port() const { return port_; }
  std::unique_ptr<FdTransport> Accept();

 private:
  int fd_;
  uint16_t port_;
};

// Two connected in-process endpoints.
std::pair<std::unique_ptr<FdTransport>, std::unique_ptr<FdTransport>> MakeSocketPair();

}  // namespace newsbreaker

#endif  // NEWSBREAKER_TRANSPORT_H_
