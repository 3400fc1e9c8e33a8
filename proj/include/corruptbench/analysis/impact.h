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
#ifndef CORRUPTBENCH_ANALYSIS_IMPACT_H_
#define CORRUPTBENCH_ANALYSIS_IMPACT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "corruptbench/benchmark/grid.h"
#include "corruptbench/corruptions/catalog.h"
#include "corruptbench/imaging/image.h"

namespace corruptbench::analysis {

struct CorpusImage {
  std::string id;  // relative path, '/' separated
  imaging::ImageBuffer image;
};

// Every supported image below `dir`, sorted by relative path. Unreadable
// files throw IoError; an empty result throws InvalidArgument.
std::vector<CorpusImage> LoadCorpus(const std::filesystem::path& dir);

// Corpus-mean distances per severity for one corruption.
struct ImpactMeasurement {
  corruptions::Corruption corruption;
  std::array<double, corruptions::kNumSeverities> rmse{};
  std::array<double, corruptions::kNumSeverities> ssim{};

  double MeanRmse() const;
  double MeanSsim() const;
};

// Corrupts every image at every severity (seeded per image id) and averages
// RMSE and SSIM over the corpus. Work runs in parallel; reductions follow
// corpus order so results do not depend on the thread count.
std::vector<ImpactMeasurement> MeasureImpact(std::span<const CorpusImage> corpus,
                                             std::span<const corruptions::Corruption> which,
                                             std::uint64_t seed);

struct CorruptionImpact {
  std::string corruption;
  std::string group;
  double rmse = 0;  // mean over corpus and severities 1..5
  double ssim = 0;
  double rpc = 0;   // percent: mean_s P_cs / P_clean
};

struct ImpactTable {
  std::vector<CorruptionImpact> rows;
  double pearson_rmse = 0;  // r(rpc, rmse)
  double pearson_ssim = 0;  // r(rpc, ssim)
};

// Joins measurements with a grid. Needs p_clean and at least one severity per
// measured corruption. Degenerate correlations (e.g. every rpc equal) throw
// InvalidArgument naming the constant series.
ImpactTable BuildImpactTable(std::span<const ImpactMeasurement> measurements,
                             const benchmark::PerformanceGrid& grid);

// corruption,group,rmse,ssim,rpc rows followed by
// pearson_rmse,,<r>,, and pearson_ssim,,,<r>,
std::string ImpactCsv(const ImpactTable& table);

inline constexpr const char* kImpactAveraging =
    "per corruption: mean over corpus images and severities 1-5";

}  // namespace corruptbench::analysis

#endif  // CORRUPTBENCH_ANALYSIS_IMPACT_H_
