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
#include "nerbias/census.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "nerbias/errors.h"
#include "nerbias/utf8.h"

namespace nerbias {
namespace {

std::vector<std::string_view> SplitCommas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

// Matches "yobYYYY.txt" and returns the year.
std::optional<int> YearFromFileName(const std::string& name) {
  if (name.size() != 11 || !name.starts_with("yob") ||
      !name.ends_with(".txt")) {
    return std::nullopt;
  }
  int year = 0;
  const char* begin = name.data() + 3;
  auto [ptr, ec] = std::from_chars(begin, begin + 4, year);
  if (ec != std::errc() || ptr != begin + 4) return std::nullopt;
  return year;
}

std::vector<NameRecord> ParseFile(const std::filesystem::path& path,
                                  int year) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  return ParseYearFile(in, year, path.string());
}

}  // namespace

std::vector<NameRecord> ParseYearFile(std::istream& in, int year,
                                      std::string_view source) {
  std::vector<NameRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError(std::string(source), line_no, what);
    };

    auto fields = SplitCommas(line);
    if (fields.size() != 3) {
      fail(fmt::format("expected 3 columns Name,Sex,Count, got {}",
                       fields.size()));
    }
    std::string_view name = fields[0];
    if (name.empty()) fail("empty name");
    if (!utf8::IsValid(name)) fail("name is not valid UTF-8");
    if (utf8::ContainsWhitespace(name)) {
      fail(fmt::format("name '{}' contains whitespace", name));
    }
    if ((name[0] >= 'a' && name[0] <= 'z') || (name[0] >= '0' && name[0] <= '9')) {
      fail(fmt::format("name '{}' does not start with an uppercase letter",
                       name));
    }
    if (fields[1] != "F" && fields[1] != "M") {
      fail(fmt::format("sex must be F or M, got '{}'", fields[1]));
    }
    std::uint64_t count = 0;
    std::string_view count_text = fields[2];
    auto [ptr, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (count_text.empty() || ec != std::errc() ||
        ptr != count_text.data() + count_text.size()) {
      fail(fmt::format("count '{}' is not a non-negative integer", count_text));
    }
    if (count < kMinPublishedCount) {
      fail(fmt::format("count {} is below the published minimum of {}", count,
                       kMinPublishedCount));
    }
    records.push_back(
        NameRecord{std::string(name), ParseGender(fields[1]), count, year});
  }
  return records;
}

bool GenderTable::Insert(std::string name, std::uint64_t count) {
  auto [it, inserted] = counts_.emplace(std::move(name), count);
  if (inserted) total_ += count;
  return inserted;
}

std::optional<std::uint64_t> GenderTable::Find(std::string_view name) const {
  auto it = counts_.find(name);
  if (it == counts_.end()) return std::nullopt;
  return it->second;
}

void CensusIndex::AddYear(int year, std::span<const NameRecord> records) {
  if (years_.contains(year)) {
    throw DataError(fmt::format("year {} already loaded", year));
  }
  YearTables tables;
  for (const NameRecord& record : records) {
    if (record.year != year) {
      throw DataError(fmt::format("record {} carries year {}, expected {}",
                                  record.name, record.year, year));
    }
    if (!tables[static_cast<int>(record.gender)].Insert(record.name,
                                                        record.count)) {
      throw DataError(fmt::format("duplicate entry {},{} in year {}",
                                  record.name, GenderCode(record.gender),
                                  year));
    }
  }
  years_.emplace(year, std::move(tables));
}

const GenderTable* CensusIndex::Find(int year, Gender gender) const {
  auto it = years_.find(year);
  if (it == years_.end()) return nullptr;
  return &it->second[static_cast<int>(gender)];
}

std::optional<std::uint64_t> CensusIndex::Frequency(
    int year, Gender gender, std::string_view name) const {
  const GenderTable* table = Find(year, gender);
  if (table == nullptr) return std::nullopt;
  return table->Find(name);
}

std::vector<int> CensusIndex::Years() const {
  std::vector<int> years;
  years.reserve(years_.size());
  for (const auto& [year, tables] : years_) years.push_back(year);
  return years;
}

std::vector<int> CensusIndex::YearsIn(const YearRange& range) const {
  std::vector<int> years;
  for (auto it = years_.lower_bound(range.first);
       it != years_.end() && it->first <= range.last; ++it) {
    years.push_back(it->first);
  }
  return years;
}

YearRange CensusIndex::Coverage() const {
  if (years_.empty()) return {};
  return {years_.begin()->first, years_.rbegin()->first};
}

CensusIndex LoadCensus(const std::filesystem::path& dir,
                       const CensusLoadOptions& options) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(fmt::format("census directory {} does not exist", dir.string()));
  }
  std::vector<std::pair<int, std::filesystem::path>> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto year = YearFromFileName(entry.path().filename().string());
    if (year && options.window.Contains(*year)) {
      files.emplace_back(*year, entry.path());
    }
  }
  if (files.empty()) {
    throw Error(fmt::format("no yobYYYY.txt files for {} in {}",
                            FormatYearRange(options.window), dir.string()));
  }
  std::sort(files.begin(), files.end());

  unsigned jobs = options.jobs != 0 ? options.jobs
                                    : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, files.size());

  std::vector<std::vector<NameRecord>> parsed(files.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) {
      parsed[i] = ParseFile(files[i].second, files[i].first);
    }
  } else {
    // Strided partition; results land in fixed slots so order never depends
    // on scheduling.
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < files.size(); i += jobs) {
          parsed[i] = ParseFile(files[i].second, files[i].first);
        }
      }));
    }
    for (auto& worker : workers) worker.get();
  }

  CensusIndex index;
  for (std::size_t i = 0; i < files.size(); ++i) {
    try {
      index.AddYear(files[i].first, parsed[i]);
    } catch (const DataError& e) {
      throw DataError(fmt::format("{}: {}", files[i].second.string(), e.what()));
    }
  }
  return index;
}

std::set<std::string, std::less<>> UniqueNames(const CensusIndex& index,
                                               Gender gender,
                                               const YearRange& range) {
  if (range.empty()) throw Error("empty year range");
  YearRange coverage = index.Coverage();
  if (coverage.empty() || range.first < coverage.first ||
      range.last > coverage.last) {
    throw Error(fmt::format("year range {} outside census coverage {}",
                            FormatYearRange(range), FormatYearRange(coverage)));
  }
  std::set<std::string, std::less<>> names;
  for (int year : index.YearsIn(range)) {
    for (const auto& [name, count] : index.Find(year, gender)->counts()) {
      names.insert(name);
    }
  }
  return names;
}

std::map<std::string, std::uint64_t, std::less<>> AggregateCounts(
    const CensusIndex& index, Gender gender, const YearRange& range) {
  std::map<std::string, std::uint64_t, std::less<>> totals;
  for (int year : index.YearsIn(range)) {
    for (const auto& [name, count] : index.Find(year, gender)->counts()) {
      totals[name] += count;
    }
  }
  return totals;
}

}  // namespace nerbias
