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
#ifndef CORRUPTBENCH_IMAGING_RNG_H_
#define CORRUPTBENCH_IMAGING_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace corruptbench::imaging {

// 64-bit FNV-1a. Stable across platforms and builds; used for seed derivation
// and table fingerprints.
class StableHash {
 public:
  StableHash& Add(std::string_view bytes);
  StableHash& Add(std::uint64_t value);  // little-endian byte order
  std::uint64_t digest() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

// Deterministic random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; all distributions below are
// implemented here (the standard library distributions are not portable).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Stream for one (seed, image, corruption, severity) tuple. Distinct tuples
  // hash to unrelated engine seeds.
  static SeededRng Derive(std::uint64_t user_seed, std::string_view image_id,
                          std::string_view corruption, int severity);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t Below(std::uint64_t n);

  // Standard normal via Box-Muller; the second variate is cached.
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

  // Poisson(lambda), lambda >= 0. Multiplication method below 10, Hormann's
  // PTRS transformed rejection above.
  std::int64_t Poisson(double lambda);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace corruptbench::imaging

#endif  // CORRUPTBENCH_IMAGING_RNG_H_
