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
#include "corruptbench/benchmark/grid.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace corruptbench::benchmark {
namespace {

std::string DescribeMissing(const std::vector<Cell>& missing) {
  std::string s = "performance grid is incomplete; missing " + std::to_string(missing.size()) + " cell(s):";
  for (const Cell& c : missing) s += " (" + c.corruption + ", " + std::to_string(c.severity) + ")";
  return s;
}

}  // namespace

IncompleteGrid::IncompleteGrid(std::vector<Cell> missing)
    : InvalidArgument(DescribeMissing(missing)), missing_(std::move(missing)) {}

void PerformanceGrid::set_p_clean(double p) {
  if (!(p >= 0.0 && p <= 100.0)) throw InvalidArgument("P_clean must be in [0,100]");
  p_clean_ = p;
}

void PerformanceGrid::Set(std::string_view corruption, int severity, double p) {
  const auto id = corruptions::ParseCorruption(corruption);
  if (!id) throw InvalidArgument("unknown corruption: " + std::string(corruption));
  if (severity < 1 || severity > corruptions::kNumSeverities) {
    throw InvalidArgument("severity must be in 1..5, got " + std::to_string(severity));
  }
  if (!(p >= 0.0 && p <= 100.0)) throw InvalidArgument("P values must be in [0,100]");
  auto& table = corruptions::Info(*id).benchmark ? benchmark_ : validation_;
  table[std::string(corruption)][severity - 1] = p;
}

std::optional<double> PerformanceGrid::Get(std::string_view corruption, int severity) const {
  if (severity < 1 || severity > corruptions::kNumSeverities) return std::nullopt;
  for (const auto* table : {&benchmark_, &validation_}) {
    const auto it = table->find(std::string(corruption));
    if (it != table->end()) return it->second[severity - 1];
  }
  return std::nullopt;
}

std::vector<Cell> PerformanceGrid::MissingCells() const {
  std::vector<Cell> missing;
  for (const auto& info : corruptions::BenchmarkCorruptions()) {
    const auto it = benchmark_.find(std::string(info.name));
    for (int s = 1; s <= corruptions::kNumSeverities; ++s) {
      if (it == benchmark_.end() || !it->second[s - 1]) missing.push_back({std::string(info.name), s});
    }
  }
  return missing;
}

double Mpc(const PerformanceGrid& grid, bool allow_partial) {
  std::vector<Cell> missing = grid.MissingCells();
  if (!missing.empty() && !allow_partial) throw IncompleteGrid(std::move(missing));
  if (missing.empty()) {
    // Exact nesting of the definition: mean over corruptions of the mean
    // over severities.
    double outer = 0;
    for (const auto& info : corruptions::BenchmarkCorruptions()) {
      const SeverityRow& row = grid.benchmark_cells().at(std::string(info.name));
      double inner = 0;
      for (const auto& v : row) inner += *v;
      outer += inner / corruptions::kNumSeverities;
    }
    return outer / corruptions::kNumBenchmarkCorruptions;
  }
  double sum = 0;
  int count = 0;
  for (const auto& [name, row] : grid.benchmark_cells()) {
    for (const auto& v : row) {
      if (v) {
        sum += *v;
        ++count;
      }
    }
  }
  if (count == 0) throw IncompleteGrid(std::move(missing));
  return sum / count;
}

double Rpc(double mpc, double p_clean) {
  if (!(p_clean > 0.0)) throw InvalidArgument("rPC is undefined for P_clean <= 0");
  return 100.0 * mpc / p_clean;
}

double RoundOneDecimal(double v) {
  // Scale in decimal first so inputs like 48.6 (stored as 48.59999...) are
  // not pushed across a tie by binary representation error.
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v * 10.0);
  return std::nearbyint(std::strtod(buf, nullptr)) / 10.0;
}

std::optional<double> CorruptionMean(const SeverityRow& row) {
  double sum = 0;
  int n = 0;
  for (const auto& v : row) {
    if (v) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

}  // namespace corruptbench::benchmark
