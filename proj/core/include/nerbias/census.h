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

// SSA baby-name ingestion. Each yobYYYY.txt file holds "Name,Sex,Count"
// lines for one year; the index maps year -> gender -> name -> births.

#ifndef NERBIAS_CENSUS_H_
#define NERBIAS_CENSUS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nerbias/types.h"

namespace nerbias {

inline constexpr int kFirstCensusYear = 1880;
inline constexpr int kLastCensusYear = 2018;
inline constexpr YearRange kCensusYears = {kFirstCensusYear, kLastCensusYear};

// SSA only publishes names with at least this many births in a year.
inline constexpr std::uint64_t kMinPublishedCount = 5;

struct NameRecord {
  std::string name;
  Gender gender = Gender::kFemale;
  std::uint64_t count = 0;
  int year = 0;

  friend bool operator==(const NameRecord&, const NameRecord&) = default;
};

// Parses one SSA year file. Accepts LF or CRLF endings; blank lines are
// ignored. Throws ParseError (with line number) on a malformed line.
std::vector<NameRecord> ParseYearFile(std::istream& in, int year,
                                      std::string_view source = "<stream>");

// name -> births for one (year, gender). The total is maintained on insert.
class GenderTable {
 public:
  using Map = std::map<std::string, std::uint64_t, std::less<>>;

  // Returns false (and leaves the table unchanged) if name is present.
  bool Insert(std::string name, std::uint64_t count);

  std::optional<std::uint64_t> Find(std::string_view name) const;
  bool Contains(std::string_view name) const { return Find(name).has_value(); }

  const Map& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  friend bool operator==(const GenderTable&, const GenderTable&) = default;

 private:
  Map counts_;
  std::uint64_t total_ = 0;
};

class CensusIndex {
 public:
  using YearTables = std::array<GenderTable, 2>;

  // Adds all records of one year. Records must carry that year. Throws
  // DataError on a duplicate (gender, name) or if the year already exists.
  void AddYear(int year, std::span<const NameRecord> records);

  const GenderTable* Find(int year, Gender gender) const;
  std::optional<std::uint64_t> Frequency(int year, Gender gender,
                                         std::string_view name) const;

  bool HasYear(int year) const { return years_.contains(year); }
  std::vector<int> Years() const;
  // Years present within range, ascending.
  std::vector<int> YearsIn(const YearRange& range) const;
  // [min year, max year]; empty range for an empty index.
  YearRange Coverage() const;
  std::size_t num_years() const { return years_.size(); }
  bool empty() const { return years_.empty(); }

  const std::map<int, YearTables>& years() const { return years_; }

  friend bool operator==(const CensusIndex&, const CensusIndex&) = default;

 private:
  std::map<int, YearTables> years_;
};

struct CensusLoadOptions {
  // yobYYYY.txt files outside this window are ignored.
  YearRange window = kCensusYears;
  // Parallel parse workers; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

// Loads every yobYYYY.txt file under dir. Throws Error if dir is missing
// or holds no year file inside the window.
CensusIndex LoadCensus(const std::filesystem::path& dir,
                       const CensusLoadOptions& options = {});

// Distinct names recorded under gender in any year of range. Throws Error
// if range is empty or not inside the index coverage.
std::set<std::string, std::less<>> UniqueNames(const CensusIndex& index,
                                               Gender gender,
                                               const YearRange& range);

// Total births per name over range, for the given gender.
std::map<std::string, std::uint64_t, std::less<>> AggregateCounts(
    const CensusIndex& index, Gender gender, const YearRange& range);

}  // namespace nerbias

#endif  // NERBIAS_CENSUS_H_
