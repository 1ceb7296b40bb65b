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

#include "newsbreaker/transport.h"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>
#include <thread>

#include "newsbreaker/error.h"

namespace newsbreaker {
namespace {

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

[[noreturn]] void ThrowTransport(const std::string& what) {
  throw ProtocolError(ProtocolErrorKind::kTransport, what + ": " + std::strerror(errno));
}

bool IsSocket(int fd) {
  struct stat st;
  return ::fstat(fd, &st) == 0 && S_ISSOCK(st.st_mode);
}

}  // namespace

FdTransport::FdTransport(int read_fd, int write_fd, bool owns_fds, std::string description)
    : read_fd_(read_fd),
      write_fd_(write_fd),
      owns_fds_(owns_fds),
      is_socket_(IsSocket(write_fd)),
      description_(std::move(description)) {
  IgnoreSigpipe();
}

FdTransport::~FdTransport() { CloseAll(); }

void FdTransport::CloseAll() {
  if (!owns_fds_) return;
  if (write_fd_ >= 0 && write_fd_ != read_fd_) ::close(write_fd_);
  if (read_fd_ >= 0) ::close(read_fd_);
  read_fd_ = -1;
  write_fd_ = -1;
}

void FdTransport::CloseWrite() {
  if (write_fd_ < 0) return;
  if (is_socket_) {
    ::shutdown(write_fd_, SHUT_WR);
  } else if (owns_fds_) {
    ::close(write_fd_);
    write_fd_ = -1;
  }
}

ReadStatus FdTransport::ReadLine(std::string& line, std::chrono::milliseconds timeout) {
  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + timeout;
  while (true) {
    if (const size_t nl = buffer_.find('\n'); nl != std::string::npos) {
      line.assign(buffer_, 0, nl);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      buffer_.erase(0, nl + 1);
      return ReadStatus::kLine;
    }
    if (read_fd_ < 0) return ReadStatus::kEof;
    int wait_ms = -1;
    if (timeout.count() >= 0) {
      const auto left =
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
      if (left.count() <= 0) return ReadStatus::kTimeout;
      wait_ms = static_cast<int>(left.count());
    }
    pollfd pfd{read_fd_, POLLIN, 0};
    const int ready = ::poll(&pfd, 1, wait_ms);
    if (ready < 0) {
      if (errno == EINTR) continue;
      ThrowTransport("poll failed on " + description_);
    }
    if (ready == 0) return ReadStatus::kTimeout;
    char chunk[4096];
    const ssize_t got = ::read(read_fd_, chunk, sizeof(chunk));
    if (got < 0) {
      if (errno == EINTR || errno == EAGAIN) continue;
      // A reset peer is treated like end of input.
      if (errno != ECONNRESET) ThrowTransport("read failed on " + description_);
    }
    if (got <= 0) {
      // A final line without terminator still counts.
      if (!buffer_.empty()) {
        line = std::move(buffer_);
        buffer_.clear();
        return ReadStatus::kLine;
      }
      return ReadStatus::kEof;
    }
    buffer_.append(chunk, static_cast<size_t>(got));
  }
}

void FdTransport::WriteLine(std::string_view line) {
  std::string data(line);
  data.push_back('\n');
  size_t sent = 0;
  while (sent < data.size()) {
    if (write_fd_ < 0) {
      throw ProtocolError(ProtocolErrorKind::kTransport, description_ + " is closed for writing");
    }
    const ssize_t n = is_socket_
                          ? ::send(write_fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL)
                          : ::write(write_fd_, data.data() + sent, data.size() - sent);
    if (n < 0) {
      if (errno == EINTR) continue;
      ThrowTransport("write failed on " + description_);
    }
    sent += static_cast<size_t>(n);
  }
}

SubprocessTransport::SubprocessTransport(int read_fd, int write_fd, pid_t pid,
                                         std::string command)
    : FdTransport(read_fd, write_fd, true, "subprocess '" + command + "'"), pid_(pid) {}

std::unique_ptr<SubprocessTransport> SubprocessTransport::Spawn(const std::string& command) {
  IgnoreSigpipe();
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) ThrowTransport("pipe failed");
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    ThrowTransport("pipe failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) ::close(fd);
    ThrowTransport("fork failed");
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);
  return std::unique_ptr<SubprocessTransport>(
      new SubprocessTransport(from_child[0], to_child[1], pid, command));
}

SubprocessTransport::~SubprocessTransport() {
  CloseWrite();
  // Give the child a moment to exit on end of input, then insist.
  for (int i = 0; i < 200; ++i) {
    int status = 0;
    const pid_t done = ::waitpid(pid_, &status, WNOHANG);
    if (done == pid_ || done < 0) {
      CloseAll();
      return;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(10));
  }
  ::kill(pid_, SIGKILL);
  ::waitpid(pid_, nullptr, 0);
  CloseAll();
}

std::unique_ptr<FdTransport> ConnectTcp(const std::string& host, uint16_t port,
                                        std::chrono::milliseconds timeout) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* found = nullptr;
  const std::string service = std::to_string(port);
  if (const int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &found); rc != 0) {
    throw ProtocolError(ProtocolErrorKind::kTransport,
                        "cannot resolve " + host + ": " + ::gai_strerror(rc));
  }
  const std::string where = "tcp " + host + ":" + service;
  int fd = -1;
  for (addrinfo* ai = found; ai != nullptr && fd < 0; ai = ai->ai_next) {
    fd = ::socket(ai->ai_family, ai->ai_socktype | SOCK_CLOEXEC | SOCK_NONBLOCK, ai->ai_protocol);
    if (fd < 0) continue;
    if (::connect(fd, ai->ai_addr, ai->ai_addrlen) != 0 && errno != EINPROGRESS) {
      ::close(fd);
      fd = -1;
      continue;
    }
    pollfd pfd{fd, POLLOUT, 0};
    int err = 0;
    socklen_t len = sizeof(err);
    if (::poll(&pfd, 1, static_cast<int>(timeout.count())) != 1 ||
        ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &len) != 0 || err != 0) {
      ::close(fd);
      fd = -1;
    }
  }
  ::freeaddrinfo(found);
  if (fd < 0) {
    throw ProtocolError(ProtocolErrorKind::kTransport, "cannot connect to " + where);
  }
  const int flags = ::fcntl(fd, F_GETFL);
  ::fcntl(fd, F_SETFL, flags & ~O_NONBLOCK);
  const int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
  return std::make_unique<FdTransport>(fd, fd, true, where);
}

TcpListener::TcpListener(uint16_t port, bool bind_all) {
  fd_ = ::socket(AF_INET, SOCK_STREAM | SOCK_CLOEXEC, 0);
  if (fd_ < 0) ThrowTransport("socket failed");
  const int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  addr.sin_addr.s_addr = htonl(bind_all ? INADDR_ANY : INADDR_LOOPBACK);
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
      ::listen(fd_, 8) != 0) {
    const int saved = errno;
    ::close(fd_);
    errno = saved;
    ThrowTransport("cannot listen on port " + std::to_string(port));
  }
  socklen_t len = sizeof(addr);
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() { ::close(fd_); }

std::unique_ptr<FdTransport> TcpListener::Accept() {
  while (true) {
    const int fd = ::accept4(fd_, nullptr, nullptr, SOCK_CLOEXEC);
    if (fd >= 0) {
      const int one = 1;
      ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
      return std::make_unique<FdTransport>(fd, fd, true,
                                           "tcp client on port " + std::to_string(port_));
    }
    if (errno != EINTR) ThrowTransport("accept failed");
  }
}

std::pair<std::unique_ptr<FdTransport>, std::unique_ptr<FdTransport>> MakeSocketPair() {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    ThrowTransport("socketpair failed");
  }
  return {std::make_unique<FdTransport>(fds[0], fds[0], true, "socketpair[0]"),
          std::make_unique<FdTransport>(fds[1], fds[1], true, "socketpair[1]")};
}

}  // namespace newsbreaker
