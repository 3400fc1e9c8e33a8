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
// Parallel kernels against their serial reference implementations.
// Thread count follows OMP_NUM_THREADS.
#include <random>

#include <benchmark/benchmark.h>

#include "corruptbench/analysis/metrics.h"
#include "corruptbench/imaging/filter.h"

namespace corruptbench {
namespace {

imaging::Raster Noise(int w, int h, int c) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  imaging::Raster r(w, h, c);
  for (double& v : r.data()) v = u(gen);
  return r;
}

imaging::ImageBuffer NoiseImage(int w, int h, int c, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  imaging::ImageBuffer img(w, h, c);
  for (auto& v : img.data()) v = static_cast<std::uint8_t>(gen() & 0xff);
  return img;
}

void BM_GaussianParallel(benchmark::State& state) {
  const imaging::Raster in = Noise(640, 480, 3);
  const double sigma = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(imaging::GaussianFilter(in, sigma));
}

void BM_GaussianSerial(benchmark::State& state) {
  const imaging::Raster in = Noise(640, 480, 3);
  const double sigma = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(imaging::reference::GaussianFilter(in, sigma));
}

void BM_DiskParallel(benchmark::State& state) {
  const imaging::Raster in = Noise(640, 480, 3);
  const imaging::Kernel2D k = imaging::DiskKernel(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(imaging::Filter2D(in, k));
}

void BM_DiskSerial(benchmark::State& state) {
  const imaging::Raster in = Noise(640, 480, 3);
  const imaging::Kernel2D k = imaging::DiskKernel(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(imaging::reference::Filter2D(in, k));
}

void BM_SsimParallel(benchmark::State& state) {
  const auto a = NoiseImage(640, 480, 3, 1), b = NoiseImage(640, 480, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::Ssim(a, b));
}

void BM_SsimSerial(benchmark::State& state) {
  const auto a = NoiseImage(640, 480, 3, 1), b = NoiseImage(640, 480, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(analysis::reference::Ssim(a, b));
}

BENCHMARK(BM_GaussianParallel)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussianSerial)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiskParallel)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiskSerial)->Arg(3)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SsimParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SsimSerial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace corruptbench

BENCHMARK_MAIN();
