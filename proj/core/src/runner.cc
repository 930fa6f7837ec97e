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
#include "nerbias/runner.h"

#include <poll.h>
#include <signal.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <utility>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "nerbias/errors.h"
#include "subprocess.h"

namespace nerbias {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::chrono::milliseconds kExitGrace{2000};

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

struct Worker {
  explicit Worker(const std::string& command) : process(command) {}

  internal::Subprocess process;
  std::string write_buffer;
  std::size_t write_offset = 0;
  std::string read_buffer;
  // id -> deadline
  std::unordered_map<std::string, Clock::time_point> outstanding;
  bool eof = false;

  bool has_pending_write() const { return write_offset < write_buffer.size(); }
};

class AdapterRun {
 public:
  AdapterRun(const std::string& command, std::span<const Request> requests,
             const RunOptions& options, std::optional<RunManifest>& manifest)
      : requests_(requests), options_(options), manifest_(manifest) {
    if (options.in_flight == 0) throw Error("in_flight must be positive");
    if (options.processes == 0) throw Error("processes must be positive");
    lines_.reserve(requests.size());
    std::set<std::string_view> ids;
    for (const Request& r : requests) {
      if (!ids.insert(r.id).second) {
        throw DataError(fmt::format("duplicate request id {}", r.id));
      }
      lines_.push_back(EncodeRequest(r));
      lines_.back() += '\n';
    }
    IgnoreSigpipe();
    std::size_t count = std::min(options.processes, std::max<std::size_t>(1, requests.size()));
    for (std::size_t i = 0; i < count; ++i) {
      workers_.push_back(std::make_unique<Worker>(command));
    }
  }

  RunResult Run() {
    while (done_ < requests_.size()) {
      Dispatch();
      PollOnce();
      ExpireDeadlines();
    }
    auto deadline = Clock::now() + kExitGrace;
    Drain(deadline);
    for (auto& worker : workers_) {
      worker->process.Finish(std::max(
          std::chrono::milliseconds(0),
          std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now())));
    }
    return std::move(result_);
  }

 private:
  void Dispatch() {
    for (auto& worker : workers_) {
      if (worker->eof) continue;
      while (next_ < requests_.size() &&
             worker->outstanding.size() < options_.in_flight) {
        if (worker->write_offset > 0 &&
            worker->write_offset == worker->write_buffer.size()) {
          worker->write_buffer.clear();
          worker->write_offset = 0;
        }
        worker->write_buffer += lines_[next_];
        worker->outstanding.emplace(requests_[next_].id,
                                    Clock::now() + options_.item_timeout);
        ++next_;
      }
      if (next_ == requests_.size() && !worker->has_pending_write()) {
        worker->process.CloseStdin();
      }
    }
  }

  // Reads whatever the adapters still print after the last expected
  // response, so trailing duplicates are caught. Gives up after the grace
  // period; adapters that linger are killed by Finish.
  void Drain(Clock::time_point deadline) {
    for (auto& worker : workers_) worker->process.CloseStdin();
    while (Clock::now() < deadline) {
      std::vector<pollfd> fds;
      std::vector<Worker*> owners;
      for (auto& worker : workers_) {
        if (!worker->eof && worker->process.stdout_fd() >= 0) {
          fds.push_back({worker->process.stdout_fd(), POLLIN, 0});
          owners.push_back(worker.get());
        }
      }
      if (fds.empty()) return;
      auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - Clock::now());
      int rc = ::poll(fds.data(), fds.size(),
                      static_cast<int>(std::max<std::int64_t>(0, left.count())));
      if (rc <= 0) return;
      for (std::size_t i = 0; i < fds.size(); ++i) {
        if (fds[i].revents != 0) Read(*owners[i]);
      }
    }
  }

  void PollOnce() {
    std::vector<pollfd> fds;
    std::vector<std::pair<Worker*, bool>> owners;  // (worker, is_write)
    for (auto& worker : workers_) {
      if (!worker->eof && worker->process.stdout_fd() >= 0) {
        fds.push_back({worker->process.stdout_fd(), POLLIN, 0});
        owners.emplace_back(worker.get(), false);
      }
      if (worker->has_pending_write() && worker->process.stdin_fd() >= 0) {
        fds.push_back({worker->process.stdin_fd(), POLLOUT, 0});
        owners.emplace_back(worker.get(), true);
      }
    }
    if (fds.empty()) {
      throw AdapterError("adapter processes exited before all responses",
                         UnansweredIds());
    }
    int rc = ::poll(fds.data(), fds.size(), PollTimeoutMs());
    if (rc < 0) {
      if (errno == EINTR) return;
      throw Error(fmt::format("poll: {}", std::strerror(errno)));
    }
    for (std::size_t i = 0; i < fds.size(); ++i) {
      if (fds[i].revents == 0) continue;
      auto [worker, is_write] = owners[i];
      if (is_write) {
        Write(*worker);
      } else {
        Read(*worker);
      }
    }
  }

  void Write(Worker& worker) {
    ssize_t n = ::write(worker.process.stdin_fd(),
                        worker.write_buffer.data() + worker.write_offset,
                        worker.write_buffer.size() - worker.write_offset);
    if (n < 0) {
      if (errno == EAGAIN || errno == EINTR) return;
      // EPIPE: the child is gone; its stdout EOF reports the missing ids.
      worker.process.CloseStdin();
      worker.write_offset = worker.write_buffer.size();
      return;
    }
    worker.write_offset += static_cast<std::size_t>(n);
    if (next_ == requests_.size() && !worker.has_pending_write()) {
      worker.process.CloseStdin();
    }
  }

  void Read(Worker& worker) {
    char buffer[65536];
    ssize_t n = ::read(worker.process.stdout_fd(), buffer, sizeof(buffer));
    if (n < 0) {
      if (errno == EAGAIN || errno == EINTR) return;
      throw Error(fmt::format("read from adapter: {}", std::strerror(errno)));
    }
    if (n == 0) {
      worker.eof = true;
      if (!worker.read_buffer.empty()) {
        HandleLine(worker, worker.read_buffer);
        worker.read_buffer.clear();
      }
      if (!worker.outstanding.empty() || next_ < requests_.size()) {
        throw AdapterError("adapter process exited before all responses",
                           UnansweredIds());
      }
      return;
    }
    worker.read_buffer.append(buffer, static_cast<std::size_t>(n));
    std::size_t start = 0;
    while (true) {
      std::size_t newline = worker.read_buffer.find('\n', start);
      if (newline == std::string::npos) break;
      std::string_view line(worker.read_buffer.data() + start, newline - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) HandleLine(worker, line);
      start = newline + 1;
    }
    worker.read_buffer.erase(0, start);
  }

  void HandleLine(Worker& worker, std::string_view line) {
    if (auto info = ParseAdapterInfo(line)) {
      if (manifest_) {
        if (manifest_->model_name.empty()) manifest_->model_name = info->first;
        if (manifest_->model_version.empty()) manifest_->model_version = info->second;
      }
      return;
    }
    ResponseRecord record = DecodeResponseRecord(line);
    const std::string& id = record.item.item_id;
    auto it = worker.outstanding.find(id);
    if (it == worker.outstanding.end()) {
      if (result_.tagged.contains(id)) {
        throw AdapterError("duplicate response id", {id});
      }
      if (result_.failures.contains(id)) return;  // late answer after timeout
      throw AdapterError("response for unknown id", {id});
    }
    worker.outstanding.erase(it);
    ++done_;
    if (record.error) {
      Fail(id, fmt::format("adapter error: {}", *record.error));
      return;
    }
    result_.tagged.emplace(id, std::move(record.item));
  }

  void Fail(const std::string& id, std::string reason) {
    if (!options_.skip_failures) {
      throw AdapterError(fmt::format("item failed ({})", reason), {id});
    }
    result_.failures.emplace(id, std::move(reason));
  }

  void ExpireDeadlines() {
    auto now = Clock::now();
    std::vector<std::string> expired;
    for (auto& worker : workers_) {
      for (auto it = worker->outstanding.begin(); it != worker->outstanding.end();) {
        if (it->second <= now) {
          expired.push_back(it->first);
          it = worker->outstanding.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(expired.begin(), expired.end());
    if (!expired.empty() && !options_.skip_failures) {
      throw AdapterError(
          fmt::format("no response within {} ms", options_.item_timeout.count()),
          expired);
    }
    for (std::string& id : expired) {
      ++done_;
      Fail(id, "timeout");
    }
  }

  int PollTimeoutMs() const {
    auto now = Clock::now();
    auto earliest = now + std::chrono::seconds(1);
    for (const auto& worker : workers_) {
      for (const auto& [id, deadline] : worker->outstanding) {
        earliest = std::min(earliest, deadline);
      }
    }
    auto wait = std::chrono::duration_cast<std::chrono::milliseconds>(earliest - now);
    return static_cast<int>(std::max<std::int64_t>(0, wait.count() + 1));
  }

  std::vector<std::string> UnansweredIds() const {
    std::vector<std::string> ids;
    for (const Request& r : requests_) {
      if (!result_.tagged.contains(r.id) && !result_.failures.contains(r.id)) {
        ids.push_back(r.id);
      }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  std::span<const Request> requests_;
  RunOptions options_;
  std::optional<RunManifest>& manifest_;
  std::vector<std::string> lines_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::size_t next_ = 0;
  std::size_t done_ = 0;
  RunResult result_;
};

}  // namespace

std::optional<std::pair<std::string, std::string>> ParseAdapterInfo(
    std::string_view line) {
  if (line.find("\"adapter\"") == std::string_view::npos) return std::nullopt;
  auto j = nlohmann::json::parse(line, nullptr, false);
  if (!j.is_object() || j.contains("id") || !j.contains("adapter")) {
    return std::nullopt;
  }
  const auto& info = j.at("adapter");
  if (!info.is_object()) throw ProtocolError("adapter", "not an object");
  auto text = [&](const char* key) -> std::string {
    auto it = info.find(key);
    if (it == info.end()) return {};
    if (!it->is_string()) {
      throw ProtocolError(fmt::format("adapter.{}", key), "not a string");
    }
    return it->get<std::string>();
  };
  return std::make_pair(text("name"), text("version"));
}

RunResult RunAdapter(const std::string& command,
                     std::span<const Request> requests,
                     const RunOptions& options,
                     std::optional<RunManifest> manifest) {
  RunResult result;
  if (!requests.empty()) {
    result = AdapterRun(command, requests, options, manifest).Run();
  }
  result.manifest = std::move(manifest);
  return result;
}

void WriteRunResult(std::ostream& out, const RunResult& result) {
  if (result.manifest) {
    nlohmann::json header{{"manifest", ManifestToJson(*result.manifest)}};
    out << header.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict)
        << '\n';
  }
  auto tagged = result.tagged.begin();
  auto failed = result.failures.begin();
  while (tagged != result.tagged.end() || failed != result.failures.end()) {
    if (failed == result.failures.end() ||
        (tagged != result.tagged.end() && tagged->first < failed->first)) {
      out << EncodeResponse(tagged->second) << '\n';
      ++tagged;
    } else {
      out << EncodeErrorResponse(failed->first, failed->second) << '\n';
      ++failed;
    }
  }
}

RunResult LoadPretagged(std::istream& in, std::string_view source) {
  RunResult result;
  std::string line;
  std::size_t line_no = 0;
  bool first_record = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      if (first_record && line.find("\"manifest\"") != std::string::npos) {
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_object() && j.contains("manifest") && !j.contains("id")) {
          result.manifest = ManifestFromJson(j.at("manifest"));
          first_record = false;
          continue;
        }
      }
      first_record = false;
      if (ParseAdapterInfo(line)) continue;
      ResponseRecord record = DecodeResponseRecord(line);
      std::string id = record.item.item_id;
      if (result.tagged.contains(id) || result.failures.contains(id)) {
        throw DataError(fmt::format("{}:{}: duplicate id {}", source, line_no, id));
      }
      if (record.error) {
        result.failures.emplace(std::move(id), std::move(*record.error));
      } else {
        result.tagged.emplace(std::move(id), std::move(record.item));
      }
    } catch (const ProtocolError& e) {
      throw ProtocolError(e.field(),
                          fmt::format("{}:{}: {}", source, line_no, e.detail()));
    }
  }
  return result;
}

void CheckCoverage(const RunResult& result,
                   std::span<const std::string> expected_ids) {
  std::set<std::string_view> expected(expected_ids.begin(), expected_ids.end());
  std::vector<std::string> missing;
  for (std::string_view id : expected) {
    if (!result.tagged.contains(id) && !result.failures.contains(id)) {
      missing.emplace_back(id);
    }
  }
  if (!missing.empty()) {
    throw DataError(fmt::format("{} item(s) missing from results: {}",
                                missing.size(), JoinIds(missing)));
  }
  std::vector<std::string> extra;
  for (const auto& [id, tagged] : result.tagged) {
    if (!expected.contains(id)) extra.push_back(id);
  }
  for (const auto& [id, reason] : result.failures) {
    if (!expected.contains(id)) extra.push_back(id);
  }
  if (!extra.empty()) {
    std::sort(extra.begin(), extra.end());
    throw DataError(fmt::format("{} result id(s) not in the benchmark: {}",
                                extra.size(), JoinIds(extra)));
  }
}

}  // namespace nerbias
