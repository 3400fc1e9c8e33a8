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
#include "corruptbench/corruptions/catalog.h"

#include <array>

namespace corruptbench::corruptions {
namespace {

using enum Corruption;
using enum Group;

constexpr std::array<CorruptionInfo, 19> kCatalog = {{
    {kGaussianNoise, "gaussian_noise", kNoise, true},
    {kShotNoise, "shot_noise", kNoise, true},
    {kImpulseNoise, "impulse_noise", kNoise, true},
    {kDefocusBlur, "defocus_blur", kBlur, true},
    {kGlassBlur, "glass_blur", kBlur, true},
    {kMotionBlur, "motion_blur", kBlur, true},
    {kZoomBlur, "zoom_blur", kBlur, true},
    {kSnow, "snow", kWeather, true},
    {kFrost, "frost", kWeather, true},
    {kFog, "fog", kWeather, true},
    {kBrightness, "brightness", kWeather, true},
    {kContrast, "contrast", kDigital, true},
    {kElasticTransform, "elastic_transform", kDigital, true},
    {kPixelate, "pixelate", kDigital, true},
    {kJpegCompression, "jpeg_compression", kDigital, true},
    {kSpeckleNoise, "speckle_noise", kNoise, false},
    {kGaussianBlur, "gaussian_blur", kBlur, false},
    {kSpatter, "spatter", kWeather, false},
    {kSaturate, "saturate", kDigital, false},
}};

}  // namespace

std::span<const CorruptionInfo> AllCorruptions() { return kCatalog; }

std::span<const CorruptionInfo> BenchmarkCorruptions() {
  return std::span(kCatalog).first(kNumBenchmarkCorruptions);
}

std::span<const CorruptionInfo> ValidationCorruptions() {
  return std::span(kCatalog).subspan(kNumBenchmarkCorruptions);
}

const CorruptionInfo& Info(Corruption c) { return kCatalog[static_cast<int>(c)]; }

std::string_view Name(Corruption c) { return Info(c).name; }

std::string_view GroupName(Group g) {
  switch (g) {
    case kNoise: return "noise";
    case kBlur: return "blur";
    case kWeather: return "weather";
    case kDigital: return "digital";
  }
  return "unknown";
}

std::optional<Corruption> ParseCorruption(std::string_view name) {
  for (const CorruptionInfo& info : kCatalog) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

}  // namespace corruptbench::corruptions
