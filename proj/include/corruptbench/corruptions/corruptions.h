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
#ifndef CORRUPTBENCH_CORRUPTIONS_CORRUPTIONS_H_
#define CORRUPTBENCH_CORRUPTIONS_CORRUPTIONS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "corruptbench/corruptions/catalog.h"
#include "corruptbench/corruptions/kernels.h"
#include "corruptbench/imaging/image.h"
#include "corruptbench/imaging/rng.h"

namespace corruptbench::corruptions {

struct DefocusParams {
  double radius;
  double alias_sigma;
};

struct MotionParams {
  int length;
  double sigma;
};

struct SaturateParams {
  double gain;
  double offset;
};

template <typename T>
using PerSeverity = std::array<T, kNumSeverities>;

// Parameters for severities 1..5 (index 0..4) of every corruption. The
// values are this library's own; they are fingerprinted into every report
// and manifest via SeverityTableHash().
struct SeverityTable {
  PerSeverity<double> gaussian_noise_sigma;
  PerSeverity<double> shot_noise_photons;
  PerSeverity<double> impulse_noise_amount;
  PerSeverity<double> speckle_noise_sigma;
  PerSeverity<DefocusParams> defocus_blur;
  PerSeverity<GlassBlurParams> glass_blur;
  PerSeverity<MotionParams> motion_blur;
  PerSeverity<double> zoom_blur_max;
  double zoom_blur_step;
  PerSeverity<double> gaussian_blur_sigma;
  PerSeverity<SnowParams> snow;
  PerSeverity<FrostParams> frost;
  PerSeverity<FogParams> fog;
  PerSeverity<SpatterParams> spatter;
  PerSeverity<double> brightness_offset;
  PerSeverity<double> contrast_factor;
  PerSeverity<SaturateParams> saturate;
  PerSeverity<ElasticParams> elastic_transform;
  PerSeverity<double> pixelate_factor;
  PerSeverity<int> jpeg_quality;
};

const SeverityTable& Severities();

// One line per corruption and severity, "name severity key=value ...",
// with round-trippable numbers.
std::string DescribeSeverityTable(const SeverityTable& table = Severities());

// FNV-1a of DescribeSeverityTable(), as 16 lowercase hex digits.
std::string SeverityTableHash();

// Decoded frost textures shipped with the library (RGB, at least five).
std::span<const Raster> FrostTextures();

// Applies one corruption at severity 1..5 with an explicit random stream.
// Severity 0 returns the input unchanged; 1x1 images pass through unchanged.
// Throws InvalidArgument for severities outside 0..5.
ImageBuffer Corrupt(const ImageBuffer& img, Corruption corruption, int severity, SeededRng& rng);

// Entry point with seed derivation: the stream is
// SeededRng::Derive(seed, image_id, name, severity).
ImageBuffer Corrupt(const ImageBuffer& img, Corruption corruption, int severity,
                    std::uint64_t seed, std::string_view image_id = {});

// As above, by stable name. Throws InvalidArgument for unknown names.
ImageBuffer Corrupt(const ImageBuffer& img, std::string_view name, int severity,
                    std::uint64_t seed, std::string_view image_id = {});

}  // namespace corruptbench::corruptions

#endif  // CORRUPTBENCH_CORRUPTIONS_CORRUPTIONS_H_
