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
#include "corruptbench/analysis/impact.h"

#include <algorithm>
#include <cstdio>
#include <exception>

#include "corruptbench/analysis/metrics.h"
#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/corruptions.h"
#include "corruptbench/imaging/io.h"

namespace corruptbench::analysis {
namespace {

namespace fs = std::filesystem;
using corruptions::kNumSeverities;

std::string Fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

double Mean(const std::array<double, kNumSeverities>& xs) {
  double s = 0;
  for (double v : xs) s += v;
  return s / kNumSeverities;
}

}  // namespace

std::vector<CorpusImage> LoadCorpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("corpus is not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && imaging::IsSupportedImagePath(entry.path())) files.push_back(entry.path());
  }
  std::vector<CorpusImage> corpus;
  for (const auto& f : files) corpus.push_back({fs::relative(f, dir).generic_string(), {}});
  std::sort(corpus.begin(), corpus.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  if (corpus.empty()) throw InvalidArgument("corpus is empty: " + dir.string());
  for (auto& item : corpus) item.image = imaging::ReadImage(dir / item.id);
  return corpus;
}

double ImpactMeasurement::MeanRmse() const { return Mean(rmse); }
double ImpactMeasurement::MeanSsim() const { return Mean(ssim); }

std::vector<ImpactMeasurement> MeasureImpact(std::span<const CorpusImage> corpus,
                                             std::span<const corruptions::Corruption> which,
                                             std::uint64_t seed) {
  if (corpus.empty()) throw InvalidArgument("impact analysis needs a non-empty corpus");
  const std::size_t n_img = corpus.size();
  const std::size_t n_task = which.size() * kNumSeverities * n_img;
  std::vector<double> rmse(n_task), ssim(n_task);
  std::vector<std::exception_ptr> errors(n_task);

  // Task index = (corruption * severities + severity) * images + image.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(n_task); ++t) {
    const std::size_t i = t % n_img;
    const int s = static_cast<int>((t / n_img) % kNumSeverities) + 1;
    const auto c = which[t / (n_img * kNumSeverities)];
    try {
      const auto& clean = corpus[i].image;
      const auto out = corruptions::Corrupt(clean, c, s, seed, corpus[i].id);
      rmse[t] = Rmse(clean, out);
      ssim[t] = Ssim(clean, out);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<ImpactMeasurement> result;
  for (std::size_t k = 0; k < which.size(); ++k) {
    ImpactMeasurement m{which[k]};
    for (int s = 0; s < kNumSeverities; ++s) {
      double sr = 0, ss = 0;
      for (std::size_t i = 0; i < n_img; ++i) {
        const std::size_t t = (k * kNumSeverities + s) * n_img + i;
        sr += rmse[t];
        ss += ssim[t];
      }
      m.rmse[s] = sr / n_img;
      m.ssim[s] = ss / n_img;
    }
    result.push_back(m);
  }
  return result;
}

ImpactTable BuildImpactTable(std::span<const ImpactMeasurement> measurements,
                             const benchmark::PerformanceGrid& grid) {
  if (measurements.empty()) throw InvalidArgument("impact table needs at least one corruption");
  if (!grid.p_clean()) throw InvalidArgument("grid has no clean performance");
  ImpactTable table;
  std::vector<double> rpc, rmse, ssim;
  for (const auto& m : measurements) {
    const auto& info = corruptions::Info(m.corruption);
    const std::string name(info.name);
    const auto& cells = info.benchmark ? grid.benchmark_cells() : grid.validation_cells();
    const auto it = cells.find(name);
    const auto mean_p = it == cells.end() ? std::nullopt : benchmark::CorruptionMean(it->second);
    if (!mean_p) throw InvalidArgument("grid has no results for corruption " + name);
    CorruptionImpact row{name, std::string(corruptions::GroupName(info.group)), m.MeanRmse(), m.MeanSsim(),
                         benchmark::Rpc(*mean_p, *grid.p_clean())};
    rpc.push_back(row.rpc);
    rmse.push_back(row.rmse);
    ssim.push_back(row.ssim);
    table.rows.push_back(std::move(row));
  }
  try {
    table.pearson_rmse = Pearson(rpc, rmse);
    table.pearson_ssim = Pearson(rpc, ssim);
  } catch (const InvalidArgument& e) {
    // The first argument is always the rpc column.
    throw InvalidArgument(std::string("impact correlation undefined: ") + e.what());
  }
  return table;
}

std::string ImpactCsv(const ImpactTable& table) {
  std::string out = "corruption,group,rmse,ssim,rpc\n";
  for (const auto& r : table.rows) {
    out += r.corruption + "," + r.group + "," + Fmt(r.rmse) + "," + Fmt(r.ssim) + "," + Fmt(r.rpc) + "\n";
  }
  out += "pearson_rmse,," + Fmt(table.pearson_rmse) + ",,\n";
  out += "pearson_ssim,,," + Fmt(table.pearson_ssim) + ",\n";
  return out;
}

}  // namespace corruptbench::analysis
