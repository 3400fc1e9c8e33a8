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
#include "corruptbench/corruptions/corruptions.h"

#include <cstdio>
#include <mutex>
#include <string>
#include <vector>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/embedded.h"
#include "corruptbench/imaging/color.h"
#include "corruptbench/imaging/io.h"

namespace corruptbench::corruptions {
namespace {

const SeverityTable kTable = {
    .gaussian_noise_sigma = {0.08, 0.12, 0.18, 0.26, 0.38},
    .shot_noise_photons = {60, 25, 12, 5, 3},
    .impulse_noise_amount = {0.03, 0.06, 0.09, 0.17, 0.27},
    .speckle_noise_sigma = {0.15, 0.2, 0.35, 0.45, 0.6},
    .defocus_blur = {{{3, 0.1}, {4, 0.5}, {6, 0.5}, {8, 0.5}, {10, 0.5}}},
    .glass_blur = {{{0.7, 1, 1}, {0.9, 2, 2}, {1.0, 2, 3}, {1.1, 3, 4}, {1.5, 4, 5}}},
    .motion_blur = {{{10, 3}, {15, 5}, {15, 8}, {15, 12}, {20, 15}}},
    .zoom_blur_max = {1.10, 1.15, 1.20, 1.25, 1.30},
    .zoom_blur_step = 0.01,
    .gaussian_blur_sigma = {1, 2, 3, 4, 6},
    .snow = {{{0.1, 0.3, 3.0, 0.5, 10, 4, 0.8},
              {0.2, 0.3, 2.5, 0.55, 12, 4, 0.75},
              {0.55, 0.3, 4.0, 0.9, 12, 8, 0.7},
              {0.55, 0.3, 3.5, 0.85, 12, 8, 0.7},
              {0.55, 0.3, 2.5, 0.85, 12, 12, 0.55}}},
    .frost = {{{1.0, 0.4}, {0.8, 0.6}, {0.7, 0.7}, {0.65, 0.8}, {0.6, 0.9}}},
    .fog = {{{1.0, 0.5}, {1.5, 0.5}, {2.0, 0.55}, {3.0, 0.55}, {6.0, 0.55}}},
    .spatter = {{{4.0, 1.6, 0.6, false},
                 {3.5, 1.3, 0.65, false},
                 {3.0, 1.0, 0.7, false},
                 {3.0, 0.75, 0.8, true},
                 {2.5, 0.5, 0.9, true}}},
    .brightness_offset = {0.1, 0.2, 0.3, 0.4, 0.5},
    .contrast_factor = {0.4, 0.3, 0.2, 0.1, 0.05},
    .saturate = {{{1.5, 0.0}, {2.0, 0.0}, {3.0, 0.05}, {5.0, 0.1}, {10.0, 0.2}}},
    .elastic_transform = {{{0.008, 0.04, 0.01},
                           {0.016, 0.04, 0.015},
                           {0.024, 0.035, 0.02},
                           {0.032, 0.03, 0.025},
                           {0.040, 0.025, 0.03}}},
    .pixelate_factor = {1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 5, 1.0 / 6},
    .jpeg_quality = {25, 18, 15, 10, 7},
};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Describe(Corruption c, int s, const SeverityTable& t) {
  const int i = s - 1;
  switch (c) {
    case Corruption::kGaussianNoise: return "sigma=" + Num(t.gaussian_noise_sigma[i]);
    case Corruption::kShotNoise: return "photons=" + Num(t.shot_noise_photons[i]);
    case Corruption::kImpulseNoise: return "amount=" + Num(t.impulse_noise_amount[i]);
    case Corruption::kSpeckleNoise: return "sigma=" + Num(t.speckle_noise_sigma[i]);
    case Corruption::kDefocusBlur:
      return "radius=" + Num(t.defocus_blur[i].radius) +
             " alias_sigma=" + Num(t.defocus_blur[i].alias_sigma);
    case Corruption::kGlassBlur:
      return "sigma=" + Num(t.glass_blur[i].sigma) +
             " max_delta=" + std::to_string(t.glass_blur[i].max_delta) +
             " iterations=" + std::to_string(t.glass_blur[i].iterations);
    case Corruption::kMotionBlur:
      return "length=" + std::to_string(t.motion_blur[i].length) +
             " sigma=" + Num(t.motion_blur[i].sigma) + " angle=uniform(-45,45)";
    case Corruption::kZoomBlur:
      return "max_zoom=" + Num(t.zoom_blur_max[i]) + " step=" + Num(t.zoom_blur_step);
    case Corruption::kGaussianBlur: return "sigma=" + Num(t.gaussian_blur_sigma[i]);
    case Corruption::kSnow: {
      const SnowParams& p = t.snow[i];
      return "mean=" + Num(p.mean) + " stddev=" + Num(p.stddev) + " zoom=" + Num(p.zoom) +
             " threshold=" + Num(p.threshold) + " blur_length=" + std::to_string(p.blur_length) +
             " blur_sigma=" + Num(p.blur_sigma) + " blend=" + Num(p.blend);
    }
    case Corruption::kFrost:
      return "image_weight=" + Num(t.frost[i].image_weight) +
             " frost_weight=" + Num(t.frost[i].frost_weight);
    case Corruption::kFog:
      return "strength=" + Num(t.fog[i].strength) + " decay=" + Num(t.fog[i].decay);
    case Corruption::kSpatter: {
      const SpatterParams& p = t.spatter[i];
      return "blob_sigma=" + Num(p.blob_sigma) + " threshold=" + Num(p.threshold) +
             " opacity=" + Num(p.opacity) + " liquid=" + (p.mud ? "mud" : "water");
    }
    case Corruption::kBrightness: return "offset=" + Num(t.brightness_offset[i]);
    case Corruption::kContrast: return "factor=" + Num(t.contrast_factor[i]);
    case Corruption::kSaturate:
      return "gain=" + Num(t.saturate[i].gain) + " offset=" + Num(t.saturate[i].offset);
    case Corruption::kElasticTransform: {
      const ElasticParams& p = t.elastic_transform[i];
      return "amplitude=" + Num(p.amplitude) + " smoothing=" + Num(p.smoothing) +
             " affine=" + Num(p.affine);
    }
    case Corruption::kPixelate: return "factor=" + Num(t.pixelate_factor[i]);
    case Corruption::kJpegCompression: return "quality=" + std::to_string(t.jpeg_quality[i]);
  }
  return {};
}

Raster Apply(const Raster& x, Corruption c, int s, SeededRng& rng) {
  const SeverityTable& t = kTable;
  const int i = s - 1;
  switch (c) {
    case Corruption::kGaussianNoise: return GaussianNoise(x, t.gaussian_noise_sigma[i], rng);
    case Corruption::kShotNoise: return ShotNoise(x, t.shot_noise_photons[i], rng);
    case Corruption::kImpulseNoise: return ImpulseNoise(x, t.impulse_noise_amount[i], rng);
    case Corruption::kSpeckleNoise: return SpeckleNoise(x, t.speckle_noise_sigma[i], rng);
    case Corruption::kDefocusBlur:
      return DefocusBlur(x, t.defocus_blur[i].radius, t.defocus_blur[i].alias_sigma);
    case Corruption::kGlassBlur: return GlassBlur(x, t.glass_blur[i], rng);
    case Corruption::kMotionBlur: {
      const double angle = rng.Uniform(-45.0, 45.0);
      return MotionBlur(x, t.motion_blur[i].length, t.motion_blur[i].sigma, angle);
    }
    case Corruption::kZoomBlur:
      return ZoomBlur(x, ZoomLadder(t.zoom_blur_max[i], t.zoom_blur_step));
    case Corruption::kGaussianBlur: return imaging::GaussianFilter(x, t.gaussian_blur_sigma[i]);
    case Corruption::kSnow: return Snow(x, t.snow[i], rng);
    case Corruption::kFrost: {
      const auto textures = FrostTextures();
      const Raster& tex = textures[rng.Below(textures.size())];
      return Frost(x, t.frost[i], tex, rng);
    }
    case Corruption::kFog: return Fog(x, t.fog[i], rng);
    case Corruption::kSpatter: return Spatter(x, t.spatter[i], rng);
    case Corruption::kBrightness: return Brightness(x, t.brightness_offset[i]);
    case Corruption::kContrast: return Contrast(x, t.contrast_factor[i]);
    case Corruption::kSaturate: return Saturate(x, t.saturate[i].gain, t.saturate[i].offset);
    case Corruption::kElasticTransform: return ElasticTransform(x, t.elastic_transform[i], rng);
    case Corruption::kPixelate: return Pixelate(x, t.pixelate_factor[i]);
    case Corruption::kJpegCompression: break;  // handled on 8-bit data
  }
  throw InvalidArgument("corruption has no raster kernel");
}

}  // namespace

const SeverityTable& Severities() { return kTable; }

std::string DescribeSeverityTable(const SeverityTable& table) {
  std::string out;
  for (const CorruptionInfo& info : AllCorruptions()) {
    for (int s = 1; s <= kNumSeverities; ++s) {
      out += std::string(info.name) + " " + std::to_string(s) + " " + Describe(info.id, s, table) + "\n";
    }
  }
  return out;
}

std::string SeverityTableHash() {
  imaging::StableHash h;
  h.Add(DescribeSeverityTable());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h.digest()));
  return buf;
}

std::span<const Raster> FrostTextures() {
  static const std::vector<Raster> textures = [] {
    std::vector<Raster> out;
    for (std::size_t i = 0; i < assets::kNumFrostTextures; ++i) {
      const assets::EmbeddedFile& f = assets::kFrostTextures[i];
      imaging::ImageBuffer img = imaging::DecodeImage({f.data, f.size});
      out.push_back(imaging::AsRgb(imaging::ToFloat(img)));
    }
    return out;
  }();
  return textures;
}

ImageBuffer Corrupt(const ImageBuffer& img, Corruption corruption, int severity, SeededRng& rng) {
  if (severity < 0 || severity > kNumSeverities) {
    throw InvalidArgument("severity must be in 0..5, got " + std::to_string(severity));
  }
  if (severity == 0 || (img.width() == 1 && img.height() == 1)) return img;
  if (corruption == Corruption::kJpegCompression) {
    return JpegCompression(img, kTable.jpeg_quality[severity - 1]);
  }
  return imaging::FromFloat(Apply(imaging::ToFloat(img), corruption, severity, rng));
}

ImageBuffer Corrupt(const ImageBuffer& img, Corruption corruption, int severity,
                    std::uint64_t seed, std::string_view image_id) {
  SeededRng rng = SeededRng::Derive(seed, image_id, Name(corruption), severity);
  return Corrupt(img, corruption, severity, rng);
}

ImageBuffer Corrupt(const ImageBuffer& img, std::string_view name, int severity,
                    std::uint64_t seed, std::string_view image_id) {
  const std::optional<Corruption> c = ParseCorruption(name);
  if (!c) throw InvalidArgument("unknown corruption: " + std::string(name));
  return Corrupt(img, *c, severity, seed, image_id);
}

}  // namespace corruptbench::corruptions
