// Copyright 2026 The CorruptBench Authors. All Rights Reserved.
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
#ifndef CORRUPTBENCH_BENCHMARK_REPORT_H_
#define CORRUPTBENCH_BENCHMARK_REPORT_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corruptbench/benchmark/grid.h"
#include "corruptbench/deteval/evaluate.h"
#include "corruptbench/deteval/types.h"

namespace corruptbench::benchmark {

struct ReportMetadata {
  std::string model;
  std::string backbone;
  std::string dataset;
  std::string metric_mode;    // "pascal" or "coco"
  std::string interpolation;  // deteval::InterpolationName
  std::optional<std::uint64_t> seed;
  std::string tool_version;
  std::string severity_table_hash;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct CorruptionSummary {
  std::string corruption;
  std::string group;
  double mean_p = 0;  // mean over available severities
  friend bool operator==(const CorruptionSummary&, const CorruptionSummary&) = default;
};

// Everything in percent. rpc == Rpc(mpc, p_clean) at full precision; the
// emitters round to one decimal.
struct BenchmarkReport {
  ReportMetadata metadata;
  double p_clean = 0;
  double mpc = 0;
  double rpc = 0;
  bool partial = false;
  std::vector<Cell> missing;
  std::vector<CorruptionSummary> per_corruption;  // benchmark corruptions only
  std::vector<CorruptionSummary> validation;       // never part of mPC
  PerformanceGrid grid;

  friend bool operator==(const BenchmarkReport&, const BenchmarkReport&) = default;
};

// Aggregates a grid. Requires p_clean. Partial grids throw IncompleteGrid
// unless allow_partial.
BenchmarkReport MakeReport(const PerformanceGrid& grid, ReportMetadata metadata,
                           bool allow_partial = false);

// Reads <dets_dir>/clean.json and <dets_dir>/<corruption>/<severity>.json
// for every catalog corruption, evaluating each condition present. Absent
// files leave the cell empty and are listed in `missing_files` (if given).
// A missing clean.json throws InvalidArgument.
PerformanceGrid RunGrid(const deteval::GroundTruthSet& gts, const std::filesystem::path& dets_dir,
                        const deteval::EvalConfig& cfg,
                        std::vector<std::filesystem::path>* missing_files = nullptr);

std::string ToJson(const BenchmarkReport& report);
BenchmarkReport ReportFromJson(std::string_view text, std::string_view source = "<memory>");

void WriteReport(const std::filesystem::path& path, const BenchmarkReport& report);
BenchmarkReport ReadReport(const std::filesystem::path& path);

// Submission-style table, one row per report, ranked by mPC descending:
// | model | backbone | P | mPC | rPC [%] |
std::string ToMarkdown(std::span<const BenchmarkReport> reports);
std::string ToCsv(std::span<const BenchmarkReport> reports);

}  // namespace corruptbench::benchmark

#endif  // CORRUPTBENCH_BENCHMARK_REPORT_H_
