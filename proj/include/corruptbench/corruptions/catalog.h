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
#ifndef CORRUPTBENCH_CORRUPTIONS_CATALOG_H_
#define CORRUPTBENCH_CORRUPTIONS_CATALOG_H_

#include <optional>
#include <span>
#include <string_view>

namespace corruptbench::corruptions {

enum class Group { kNoise, kBlur, kWeather, kDigital };

enum class Corruption {
  // Benchmark set.
  kGaussianNoise,
  kShotNoise,
  kImpulseNoise,
  kDefocusBlur,
  kGlassBlur,
  kMotionBlur,
  kZoomBlur,
  kSnow,
  kFrost,
  kFog,
  kBrightness,
  kContrast,
  kElasticTransform,
  kPixelate,
  kJpegCompression,
  // Held-out validation set.
  kSpeckleNoise,
  kGaussianBlur,
  kSpatter,
  kSaturate,
};

struct CorruptionInfo {
  Corruption id;
  std::string_view name;  // stable, lowercase, used in output paths
  Group group;
  bool benchmark;  // false for the validation corruptions
};

inline constexpr int kNumBenchmarkCorruptions = 15;
inline constexpr int kNumValidationCorruptions = 4;
inline constexpr int kNumSeverities = 5;

// All 19, benchmark corruptions first, in enum order.
std::span<const CorruptionInfo> AllCorruptions();
std::span<const CorruptionInfo> BenchmarkCorruptions();
std::span<const CorruptionInfo> ValidationCorruptions();

const CorruptionInfo& Info(Corruption c);
std::string_view Name(Corruption c);
std::string_view GroupName(Group g);
std::optional<Corruption> ParseCorruption(std::string_view name);

}  // namespace corruptbench::corruptions

#endif  // CORRUPTBENCH_CORRUPTIONS_CATALOG_H_
