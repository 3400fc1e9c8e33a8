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
#include <algorithm>
#include <cmath>
#include <numeric>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/kernels.h"
#include "corruptbench/imaging/color.h"
#include "corruptbench/imaging/resize.h"

namespace corruptbench::corruptions {

using imaging::AsRgb;
using imaging::RestoreChannels;

namespace {

// Zoom a single-channel field about its center, keeping its size.
Raster CenterZoom(const Raster& in, double zoom) {
  if (zoom == 1.0) return in;
  const int w = in.width(), h = in.height();
  const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
  Raster out(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.at(x, y, 0) = imaging::SampleBilinear(in, cx + (x - cx) / zoom, cy + (y - cy) / zoom, 0);
    }
  }
  return out;
}

}  // namespace

Raster Snow(const Raster& in, const SnowParams& p, SeededRng& rng) {
  const int w = in.width(), h = in.height();
  Raster flakes(w, h, 1);
  for (double& v : flakes.data()) v = rng.Normal(p.mean, p.stddev);
  flakes = CenterZoom(flakes, p.zoom);
  for (double& v : flakes.data()) v = v < p.threshold ? 0.0 : std::min(v, 1.0);
  // Flakes fall downwards, tilted at most 45 degrees off vertical.
  const double angle = rng.Uniform(-135.0, -45.0);
  flakes = MotionBlur(flakes, p.blur_length, p.blur_sigma, angle);

  Raster rgb = AsRgb(in);
  const Raster gray = imaging::Luminance(rgb);
  const std::size_t n = rgb.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double whitened = gray[i] * 1.5 + 0.5;
    // The flake layer is added twice, once rotated by 180 degrees.
    const double snow = flakes[i] + flakes[n - 1 - i];
    for (int c = 0; c < 3; ++c) {
      double& v = rgb[3 * i + c];
      v = p.blend * v + (1.0 - p.blend) * std::max(v, whitened);
      v += snow;
    }
  }
  return RestoreChannels(rgb, in.channels());
}

Raster Frost(const Raster& in, const FrostParams& p, const Raster& texture, SeededRng& rng) {
  if (texture.channels() != 3) throw InvalidArgument("frost texture must be RGB");
  const int w = in.width(), h = in.height();
  Raster tex = texture;
  if (tex.width() < w || tex.height() < h) {
    // Scale so that the texture's short side covers the image's long side.
    const double factor =
        static_cast<double>(std::max(w, h)) / std::min(tex.width(), tex.height());
    tex = imaging::ResizeBilinear(tex, static_cast<int>(std::ceil(tex.width() * factor)),
                                  static_cast<int>(std::ceil(tex.height() * factor)));
  }
  const int x0 = static_cast<int>(rng.Below(static_cast<std::uint64_t>(tex.width() - w + 1)));
  const int y0 = static_cast<int>(rng.Below(static_cast<std::uint64_t>(tex.height() - h + 1)));
  const bool gray = in.channels() == 1;
  Raster out(w, h, in.channels());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int tx = x0 + x, ty = y0 + y;
      if (gray) {
        const double lum = 0.299 * tex.at(tx, ty, 0) + 0.587 * tex.at(tx, ty, 1) +
                           0.114 * tex.at(tx, ty, 2);
        out.at(x, y, 0) = p.image_weight * in.at(x, y, 0) + p.frost_weight * lum;
      } else {
        for (int c = 0; c < 3; ++c) {
          out.at(x, y, c) = p.image_weight * in.at(x, y, c) + p.frost_weight * tex.at(tx, ty, c);
        }
      }
    }
  }
  return out;
}

Raster Spatter(const Raster& in, const SpatterParams& p, SeededRng& rng) {
  const int w = in.width(), h = in.height();
  Raster liquid(w, h, 1);
  for (double& v : liquid.data()) v = rng.Normal();
  liquid = imaging::GaussianFilter(liquid, p.blob_sigma);

  // Standardize so the threshold is a z-score independent of the smoothing.
  const std::size_t n = liquid.size();
  const double mean = std::accumulate(liquid.data().begin(), liquid.data().end(), 0.0) / n;
  double var = 0.0;
  for (double v : liquid.data()) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / n);

  Raster rgb = AsRgb(in);
  const Raster blurred = imaging::GaussianFilter(rgb, 2.0);
  static constexpr double kWater[3] = {0.68, 0.78, 0.86};
  static constexpr double kMud[3] = {0.25, 0.16, 0.08};
  for (std::size_t i = 0; i < n; ++i) {
    const double z = sd > 0.0 ? (liquid[i] - mean) / sd : 0.0;
    // Soft blob edge over half a standard deviation.
    const double mask = std::clamp((z - p.threshold) / 0.5, 0.0, 1.0) * p.opacity;
    if (mask == 0.0) continue;
    for (int c = 0; c < 3; ++c) {
      const double color = p.mud ? kMud[c] : 0.5 * blurred[3 * i + c] + 0.5 * kWater[c];
      double& v = rgb[3 * i + c];
      v = v * (1.0 - mask) + color * mask;
    }
  }
  return RestoreChannels(rgb, in.channels());
}

Raster Brightness(const Raster& in, double offset) {
  Raster hsv = imaging::RgbToHsv(AsRgb(in));
  const std::size_t n = hsv.pixel_count();
  for (std::size_t i = 0; i < n; ++i) hsv[3 * i + 2] = std::clamp(hsv[3 * i + 2] + offset, 0.0, 1.0);
  return RestoreChannels(imaging::HsvToRgb(hsv), in.channels());
}

Raster Contrast(const Raster& in, double factor) {
  const int ch = in.channels();
  const std::size_t n = in.pixel_count();
  std::vector<double> means(ch, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < ch; ++c) means[c] += in[i * ch + c];
  }
  for (double& m : means) m /= static_cast<double>(n);
  Raster out(in.width(), in.height(), ch);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < ch; ++c) out[i * ch + c] = (in[i * ch + c] - means[c]) * factor + means[c];
  }
  return out;
}

Raster Saturate(const Raster& in, double gain, double offset) {
  Raster hsv = imaging::RgbToHsv(AsRgb(in));
  const std::size_t n = hsv.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    hsv[3 * i + 1] = std::clamp(hsv[3 * i + 1] * gain + offset, 0.0, 1.0);
  }
  return RestoreChannels(imaging::HsvToRgb(hsv), in.channels());
}

}  // namespace corruptbench::corruptions
