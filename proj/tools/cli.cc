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
#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nerbias/benchmark.h"
#include "nerbias/census.h"
#include "nerbias/corpus_audit.h"
#include "nerbias/errors.h"
#include "nerbias/manifest.h"
#include "nerbias/protocol.h"
#include "nerbias/report.h"
#include "nerbias/runner.h"
#include "nerbias/scoring.h"
#include "nerbias/versions.h"

namespace nerbias::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kCensusUrl = "https://www.ssa.gov/oact/babynames/names.zip";

// Flags shared by gen, run and score. Empty selection fields mean the
// default: census coverage, both genders, every template.
struct BenchmarkFlags {
  std::string census;
  std::string years;
  std::vector<std::string> genders;
  std::vector<int> templates;
  std::string template_file;
  std::string label_map;
  unsigned jobs = 1;

  bool selection_given() const {
    return !years.empty() || !genders.empty() || !templates.empty() ||
           !template_file.empty();
  }
};

void AddCensusFlag(CLI::App* app, std::string& census) {
  app->add_option("--census", census,
                  fmt::format("Directory of SSA yobYYYY.txt files ({}); "
                              "defaults to ${}",
                              kCensusUrl, kCensusEnv));
}

void AddBenchmarkFlags(CLI::App* app, BenchmarkFlags& flags) {
  AddCensusFlag(app, flags.census);
  app->add_option("--years", flags.years,
                  "Year or range, e.g. 2018 or 1880-2018 (default: census coverage)");
  app->add_option("--genders", flags.genders, "Genders to include (default: F,M)")
      ->delimiter(',')
      ->check(CLI::IsMember({"F", "M"}));
  app->add_option("--templates", flags.templates,
                  "Template ids, e.g. 4 or 1,4,9 (default: all)")
      ->delimiter(',');
  app->add_option(
      "--template-file", flags.template_file,
      "Custom templates, one '<Name> ...' pattern per line")
      ->check(CLI::ExistingFile);
  app->add_option("--label-map", flags.label_map,
                  "Extra 'raw canonical' label mappings layered over the defaults")
      ->check(CLI::ExistingFile);
  app->add_option("--jobs", flags.jobs, "Parallel census parse workers")
      ->check(CLI::PositiveNumber);
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path));
  return in;
}

// Writes to path, or to fallback when path is empty or "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(fmt::format("cannot write {}", path));
    stream_ = file_.get();
    path_ = path;
  }

  std::ostream& stream() { return *stream_; }

  void Close() {
    stream_->flush();
    if (file_) {
      file_->close();
      if (!*file_) throw Error(fmt::format("error writing {}", path_));
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  std::string path_;
};

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
}

std::string ResolveCensusDir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kCensusEnv); env && *env) return env;
  throw Error(fmt::format("no census directory: pass --census or set {} "
                          "(download {})",
                          kCensusEnv, kCensusUrl));
}

CensusIndex LoadCensusFrom(const std::string& flag, unsigned jobs) {
  CensusLoadOptions options;
  options.jobs = jobs;
  return LoadCensus(ResolveCensusDir(flag), options);
}

LabelMap LoadLabels(const std::string& path) {
  if (path.empty()) return LabelMap::Default();
  auto in = OpenInput(path);
  return LabelMap::FromStream(in, true, path);
}

BenchmarkConfig ConfigFromFlags(const BenchmarkFlags& flags) {
  BenchmarkConfig config = DefaultBenchmarkConfig();
  // Without --years the selection spans whatever the census covers.
  config.selection.years = flags.years.empty() ? YearRange{} : ParseYearRange(flags.years);
  if (!flags.genders.empty()) {
    config.selection.genders.clear();
    for (const std::string& g : flags.genders) {
      config.selection.genders.push_back(ParseGender(g));
    }
  }
  config.selection.template_ids = flags.templates;
  if (!flags.template_file.empty()) {
    auto in = OpenInput(flags.template_file);
    config.templates = LoadTemplates(in, flags.template_file);
  }
  return config;
}

// Config with the selection resolved against the census, so the manifest
// records exactly what was generated.
BenchmarkConfig ResolvedConfig(const CensusIndex& index, BenchmarkConfig config) {
  if (config.selection.years.empty()) config.selection.years = index.Coverage();
  config.selection = ResolveSelection(index, config);
  return config;
}

int Gen(const BenchmarkFlags& flags, const std::string& out_path,
        std::ostream& out) {
  CensusIndex index = LoadCensusFrom(flags.census, flags.jobs);
  BenchmarkConfig config = ResolvedConfig(index, ConfigFromFlags(flags));
  Output output(out_path, out);
  ForEachItem(index, config, [&](const BenchmarkItem& item) {
    output.stream() << EncodeRequest(item) << '\n';
  });
  output.Close();
  return 0;
}

struct RunFlags {
  std::string adapter;
  std::string model_name;
  std::string model_version;
  std::string timestamp;
  std::string out;
  std::size_t in_flight = 32;
  std::size_t processes = 1;
  long timeout_ms = 60000;
  bool skip_failures = false;
};

int Run(const BenchmarkFlags& flags, const RunFlags& run, std::ostream& out,
        std::ostream& err) {
  CensusIndex index = LoadCensusFrom(flags.census, flags.jobs);
  BenchmarkConfig config = ResolvedConfig(index, ConfigFromFlags(flags));
  LabelMap labels = LoadLabels(flags.label_map);

  std::vector<Request> requests;
  ForEachItem(index, config, [&](const BenchmarkItem& item) {
    requests.push_back(MakeRequest(item));
  });

  RunOptions options;
  options.in_flight = run.in_flight;
  options.processes = run.processes;
  options.item_timeout = std::chrono::milliseconds(run.timeout_ms);
  options.skip_failures = run.skip_failures;

  RunManifest manifest = MakeManifest(
      run.model_name, run.model_version, run.adapter, config, labels,
      run.timestamp.empty() ? CurrentTimestamp() : run.timestamp);
  RunResult result = RunAdapter(run.adapter, requests, options, manifest);

  Output output(run.out, out);
  WriteRunResult(output.stream(), result);
  output.Close();
  err << fmt::format("{} items tagged, {} failed\n", result.tagged.size(),
                     result.failures.size());
  return 0;
}

int Score(const BenchmarkFlags& flags, const std::string& run_path,
          const std::string& out_path, bool skip_failures, std::ostream& out) {
  auto in = OpenInput(run_path);
  RunResult run = LoadPretagged(in, run_path);
  CensusIndex index = LoadCensusFrom(flags.census, flags.jobs);

  BenchmarkConfig config;
  LabelMap labels;
  if (run.manifest) {
    config = run.manifest->config;
    if (flags.selection_given() &&
        BenchmarkDigest(ResolvedConfig(index, ConfigFromFlags(flags)),
                        run.manifest->labels) != run.manifest->benchmark_digest) {
      throw Error("benchmark flags disagree with the run manifest; drop them "
                  "to score the run as recorded");
    }
    labels = flags.label_map.empty() ? run.manifest->labels : LoadLabels(flags.label_map);
  } else {
    config = ResolvedConfig(index, ConfigFromFlags(flags));
    labels = LoadLabels(flags.label_map);
  }

  ScoreOptions options;
  options.skip_failures = skip_failures;
  ErrorSeries series = ScoreRun(run, config, index, labels, options);
  Output output(out_path, out);
  WriteSeriesCsv(output.stream(), series);
  output.Close();
  return 0;
}

ErrorSeries ReadSeries(const std::string& path) {
  auto in = OpenInput(path);
  return ReadSeriesCsv(in, path);
}

int Diff(const std::string& old_path, const std::string& new_path,
         const std::string& out_path, const std::string& summary_path,
         const std::string& deltas_path, std::ostream& out, std::ostream& err) {
  DeltaSeries delta = DiffRuns(ReadSeries(old_path), ReadSeries(new_path));
  for (const SeriesKey& key : delta.only_in_old) {
    err << fmt::format("warning: {} {} template {} {} only in {}\n", key.year,
                       GenderCode(key.gender), key.template_id,
                       ErrorKindSlug(key.kind), old_path);
  }
  for (const SeriesKey& key : delta.only_in_new) {
    err << fmt::format("warning: {} {} template {} {} only in {}\n", key.year,
                       GenderCode(key.gender), key.template_id,
                       ErrorKindSlug(key.kind), new_path);
  }
  VersionReport report = SummarizeVersionBias(delta);

  Output csv(out_path, out);
  WriteVersionReportCsv(csv.stream(), report);
  csv.Close();

  bool csv_on_stdout = out_path.empty() || out_path == "-";
  Output summary(summary_path, csv_on_stdout ? err : out);
  WriteVersionSummary(summary.stream(), report);
  summary.Close();

  if (!deltas_path.empty()) {
    Output deltas(deltas_path, out);
    WriteDeltaCsv(deltas.stream(), delta);
    deltas.Close();
  }
  return 0;
}

struct AuditFlags {
  std::string census;
  std::string years;  // empty: census coverage
  std::string dataset = "CoNLL 2003";
  std::string train, dev, test;
  std::string mode = "any-token";
  std::string scheme = "iob1";
  std::size_t tag_column = 3;
  bool case_insensitive = false;
  bool exclusive_gender = false;
  std::string label_map;
  std::string out;
  unsigned jobs = 1;
};

int Audit(const AuditFlags& flags, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> files;
  if (!flags.train.empty()) files.emplace_back("train", flags.train);
  if (!flags.dev.empty()) files.emplace_back("dev", flags.dev);
  if (!flags.test.empty()) files.emplace_back("test", flags.test);
  if (files.empty()) throw Error("audit needs at least one of --train, --dev, --test");

  AuditOptions options;
  options.mode = ParseMatchMode(flags.mode);
  options.scheme = ParseTagScheme(flags.scheme);
  options.case_insensitive = flags.case_insensitive;
  options.exclusive_gender = flags.exclusive_gender;
  options.labels = LoadLabels(flags.label_map);

  ConllConfig conll;
  conll.tag_column = flags.tag_column;
  conll.scheme = options.scheme;

  std::vector<CorpusSplit> splits;
  for (const auto& [name, path] : files) {
    auto in = OpenInput(path);
    splits.push_back(CorpusSplit{name, ParseConll(in, conll, path)});
  }
  CensusIndex index = LoadCensusFrom(flags.census, flags.jobs);
  options.years = flags.years.empty() ? index.Coverage() : ParseYearRange(flags.years);
  AuditReport report = AuditGenderRepresentation(splits, index, options, flags.dataset);

  Output output(flags.out, out);
  WriteAuditCsv(output.stream(), report);
  output.Close();
  return 0;
}

struct ReportFlags {
  std::string series;
  std::string out_dir;
  std::vector<int> templates;
  std::vector<std::string> kinds;
};

int Report(const ReportFlags& flags, std::ostream& out) {
  ErrorSeries series = ReadSeries(flags.series);
  std::vector<int> templates =
      flags.templates.empty() ? SeriesTemplates(series) : flags.templates;
  std::vector<ErrorKind> kinds;
  if (flags.kinds.empty()) {
    kinds.assign(kAllErrorKinds.begin(), kAllErrorKinds.end());
  } else {
    for (const std::string& slug : flags.kinds) kinds.push_back(ParseErrorKindSlug(slug));
  }

  fs::create_directories(flags.out_dir);
  for (int template_id : templates) {
    for (const ErrorKind& kind : kinds) {
      PlotSelection selection;
      selection.template_id = template_id;
      selection.kind = kind;
      for (const auto& [gender, table] : EmitPlotSeries(series, selection)) {
        WriteFile(fs::path(flags.out_dir) /
                      fmt::format("template{}_{}_{}.csv", template_id,
                                  ErrorKindSlug(kind), GenderCode(gender)),
                  table);
      }
    }
  }
  std::ostringstream summary;
  WriteGenderGapSummary(summary, series);
  WriteFile(fs::path(flags.out_dir) / "summary.txt", summary.str());
  out << summary.str();
  return 0;
}

}  // namespace

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Gender-bias audit harness for named-entity recognizers", "nerbias"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", std::string(HarnessVersion()));

  BenchmarkFlags bench;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "Emit benchmark requests as wire-protocol lines");
  AddBenchmarkFlags(gen, bench);
  gen->add_option("--out", out_path, "Output file (default: stdout)");

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "Drive an adapter process over the benchmark");
  AddBenchmarkFlags(run_cmd, bench);
  run_cmd->add_option("--adapter", run.adapter, "Adapter command, run via /bin/sh -c")
      ->required();
  run_cmd->add_option("--model-name", run.model_name, "Model name for the manifest");
  run_cmd->add_option("--model-version", run.model_version,
                      "Model version for the manifest");
  run_cmd->add_option("--timestamp", run.timestamp,
                      "Manifest timestamp (default: now, or SOURCE_DATE_EPOCH)");
  run_cmd->add_option("--in-flight", run.in_flight,
                      "Outstanding requests per adapter process")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--processes", run.processes, "Adapter processes to start")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--timeout-ms", run.timeout_ms, "Per-item response timeout")
      ->check(CLI::PositiveNumber);
  run_cmd->add_flag("--skip-failures", run.skip_failures,
                    "Record failed items instead of aborting");
  run_cmd->add_option("--out", run.out, "Results file (default: stdout)");

  std::string run_path;
  bool score_skip = false;
  auto* score = app.add_subcommand("score", "Compute the six error series of a run");
  AddBenchmarkFlags(score, bench);
  score->add_option("--run", run_path, "Results file from run or an external tagger")
      ->required()
      ->check(CLI::ExistingFile);
  score->add_option("--out", out_path, "Series CSV (default: stdout)");
  score->add_flag("--skip-failures", score_skip, "Leave failed items out of the rates");

  std::string old_path, new_path, summary_path, deltas_path;
  auto* diff = app.add_subcommand("diff", "Compare the error series of two model versions");
  diff->add_option("--old", old_path, "Series CSV of the older version")
      ->required()
      ->check(CLI::ExistingFile);
  diff->add_option("--new", new_path, "Series CSV of the newer version")
      ->required()
      ->check(CLI::ExistingFile);
  diff->add_option("--out", out_path, "Version report CSV (default: stdout)");
  diff->add_option("--summary", summary_path, "Text summary file");
  diff->add_option("--deltas", deltas_path, "Per-key delta CSV");

  AuditFlags audit;
  auto* audit_cmd = app.add_subcommand("audit", "Census-name representation in a CoNLL corpus");
  AddCensusFlag(audit_cmd, audit.census);
  audit_cmd->add_option("--dataset", audit.dataset, "Dataset label for the table");
  audit_cmd->add_option("--years", audit.years,
                        "Census years to match against (default: census coverage)");
  audit_cmd->add_option("--train", audit.train, "Training split")->check(CLI::ExistingFile);
  audit_cmd->add_option("--dev", audit.dev, "Development split")->check(CLI::ExistingFile);
  audit_cmd->add_option("--test", audit.test, "Test split")->check(CLI::ExistingFile);
  audit_cmd->add_option("--mode", audit.mode, "Token matching")
      ->check(CLI::IsMember({"any-token", "person-tagged"}));
  audit_cmd->add_option("--scheme", audit.scheme, "NER tag scheme")
      ->check(CLI::IsMember({"iob1", "iob2", "bilou"}));
  audit_cmd->add_option("--tag-column", audit.tag_column, "0-based NER tag column");
  audit_cmd->add_flag("--case-insensitive", audit.case_insensitive,
                      "Match names ignoring ASCII case");
  audit_cmd->add_flag("--exclusive-gender", audit.exclusive_gender,
                      "Count unisex names only under their more frequent gender");
  audit_cmd->add_option("--label-map", audit.label_map, "Extra label mappings")
      ->check(CLI::ExistingFile);
  audit_cmd->add_option("--jobs", audit.jobs, "Parallel census parse workers")
      ->check(CLI::PositiveNumber);
  audit_cmd->add_option("--out", audit.out, "Audit CSV (default: stdout)");

  ReportFlags report;
  auto* report_cmd = app.add_subcommand("report", "Plot-ready per-year tables and a gap summary");
  report_cmd->add_option("--series", report.series, "Series CSV from score")
      ->required()
      ->check(CLI::ExistingFile);
  report_cmd->add_option("--out-dir", report.out_dir, "Directory for the tables")->required();
  report_cmd->add_option("--templates", report.templates, "Templates (default: all)")
      ->delimiter(',');
  report_cmd->add_option("--kinds", report.kinds,
                         "Error kinds, e.g. type1_weighted (default: all six)")
      ->delimiter(',');

  std::vector<std::string> argv_storage = {"nerbias"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& arg : argv_storage) argv.push_back(arg.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) return Gen(bench, out_path, out);
    if (*run_cmd) return Run(bench, run, out, err);
    if (*score) return Score(bench, run_path, out_path, score_skip, out);
    if (*diff) {
      return Diff(old_path, new_path, out_path, summary_path, deltas_path, out, err);
    }
    if (*audit_cmd) return Audit(audit, out);
    if (*report_cmd) return Report(report, out);
  } catch (const std::exception& e) {
    err << "nerbias: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace nerbias::cli
