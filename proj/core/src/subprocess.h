// Copyright 2026 The nerbias Authors.
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
#ifndef NERBIAS_SRC_SUBPROCESS_H_
#define NERBIAS_SRC_SUBPROCESS_H_

#include <sys/types.h>

#include <chrono>
#include <string>

namespace nerbias::internal {

// Child running "/bin/sh -c command" with piped stdin/stdout (non-blocking
// on the parent side). stderr is inherited. The destructor kills and reaps
// a child that is still running.
class Subprocess {
 public:
  explicit Subprocess(const std::string& command);
  ~Subprocess();

  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;
  Subprocess(Subprocess&& other) noexcept;
  Subprocess& operator=(Subprocess&&) = delete;

  int stdin_fd() const { return stdin_fd_; }
  int stdout_fd() const { return stdout_fd_; }

  void CloseStdin();
  void CloseStdout();

  // Waits up to grace for a clean exit, then kills. Returns the wait status
  // or -1 if the child had to be killed.
  int Finish(std::chrono::milliseconds grace);

 private:
  void Kill();

  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
};

}  // namespace nerbias::internal

#endif  // NERBIAS_SRC_SUBPROCESS_H_
