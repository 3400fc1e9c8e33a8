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
#ifndef CORRUPTBENCH_BENCHMARK_GRID_H_
#define CORRUPTBENCH_BENCHMARK_GRID_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/catalog.h"

namespace corruptbench::benchmark {

using SeverityRow = std::array<std::optional<double>, corruptions::kNumSeverities>;

// A (corruption, severity) cell with no value.
struct Cell {
  std::string corruption;
  int severity;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Thrown when aggregation needs cells that were never filled.
class IncompleteGrid : public InvalidArgument {
 public:
  explicit IncompleteGrid(std::vector<Cell> missing);
  const std::vector<Cell>& missing() const { return missing_; }

 private:
  std::vector<Cell> missing_;
};

// P values in percent. Benchmark corruptions feed mPC; validation
// corruptions are kept in a separate table and never aggregated with them.
class PerformanceGrid {
 public:
  void set_p_clean(double p);
  const std::optional<double>& p_clean() const { return p_clean_; }

  // Routes by corruption name. Throws InvalidArgument for unknown names,
  // severities outside 1..5 or values outside [0,100].
  void Set(std::string_view corruption, int severity, double p);
  std::optional<double> Get(std::string_view corruption, int severity) const;

  const std::map<std::string, SeverityRow>& benchmark_cells() const { return benchmark_; }
  const std::map<std::string, SeverityRow>& validation_cells() const { return validation_; }

  // Missing benchmark cells in catalog order.
  std::vector<Cell> MissingCells() const;
  bool Complete() const { return MissingCells().empty(); }

  friend bool operator==(const PerformanceGrid&, const PerformanceGrid&) = default;

 private:
  std::optional<double> p_clean_;
  std::map<std::string, SeverityRow> benchmark_;
  std::map<std::string, SeverityRow> validation_;
};

// (1/Nc) sum_c (1/Ns) sum_s P_cs over the 15 benchmark corruptions. Throws
// IncompleteGrid unless allow_partial, in which case the mean runs over the
// filled cells only (still throws if none are filled).
double Mpc(const PerformanceGrid& grid, bool allow_partial = false);

// mPC / P_clean in percent, unrounded. Throws InvalidArgument if p_clean <= 0.
double Rpc(double mpc, double p_clean);

// Half-to-even rounding to one decimal, as used in every emitted table.
double RoundOneDecimal(double v);

// Mean over severities of one corruption (filled cells only).
std::optional<double> CorruptionMean(const SeverityRow& row);

}  // namespace corruptbench::benchmark

#endif  // CORRUPTBENCH_BENCHMARK_GRID_H_
