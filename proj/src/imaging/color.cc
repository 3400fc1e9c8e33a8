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
#include "corruptbench/imaging/color.h"

#include <algorithm>
#include <cmath>

#include "corruptbench/common/error.h"

namespace corruptbench::imaging {
namespace {

void RequireRgb(const Raster& r, const char* what) {
  if (r.channels() != 3) throw InvalidArgument(std::string(what) + " requires 3 channels");
}

}  // namespace

Raster RgbToHsv(const Raster& rgb) {
  RequireRgb(rgb, "RgbToHsv");
  Raster hsv(rgb.width(), rgb.height(), 3);
  const std::size_t n = rgb.pixel_count();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const double r = rgb[3 * i], g = rgb[3 * i + 1], b = rgb[3 * i + 2];
    const double mx = std::max({r, g, b});
    const double mn = std::min({r, g, b});
    const double chroma = mx - mn;
    double h = 0.0;
    if (chroma > 0.0) {
      if (mx == r) {
        h = (g - b) / chroma;
        if (h < 0.0) h += 6.0;
      } else if (mx == g) {
        h = (b - r) / chroma + 2.0;
      } else {
        h = (r - g) / chroma + 4.0;
      }
      h /= 6.0;
      if (h >= 1.0) h -= 1.0;
    }
    hsv[3 * i] = h;
    hsv[3 * i + 1] = mx > 0.0 ? chroma / mx : 0.0;
    hsv[3 * i + 2] = mx;
  }
  return hsv;
}

Raster HsvToRgb(const Raster& hsv) {
  RequireRgb(hsv, "HsvToRgb");
  Raster rgb(hsv.width(), hsv.height(), 3);
  const std::size_t n = hsv.pixel_count();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const double h = hsv[3 * i], s = hsv[3 * i + 1], v = hsv[3 * i + 2];
    const double h6 = (h - std::floor(h)) * 6.0;
    const int sector = static_cast<int>(h6) % 6;
    const double f = h6 - std::floor(h6);
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    double r, g, b;
    switch (sector) {
      case 0: r = v; g = t; b = p; break;
      case 1: r = q; g = v; b = p; break;
      case 2: r = p; g = v; b = t; break;
      case 3: r = p; g = q; b = v; break;
      case 4: r = t; g = p; b = v; break;
      default: r = v; g = p; b = q; break;
    }
    rgb[3 * i] = r;
    rgb[3 * i + 1] = g;
    rgb[3 * i + 2] = b;
  }
  return rgb;
}

Raster Luminance(const Raster& rgb) {
  RequireRgb(rgb, "Luminance");
  Raster out(rgb.width(), rgb.height(), 1);
  const std::size_t n = rgb.pixel_count();
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = 0.299 * rgb[3 * i] + 0.587 * rgb[3 * i + 1] + 0.114 * rgb[3 * i + 2];
  }
  return out;
}

Raster ReplicateToRgb(const Raster& gray) {
  if (gray.channels() != 1) throw InvalidArgument("ReplicateToRgb requires 1 channel");
  Raster out(gray.width(), gray.height(), 3);
  const std::size_t n = gray.pixel_count();
  for (std::size_t i = 0; i < n; ++i) out[3 * i] = out[3 * i + 1] = out[3 * i + 2] = gray[i];
  return out;
}

Raster AsRgb(const Raster& raster) {
  return raster.channels() == 3 ? raster : ReplicateToRgb(raster);
}

Raster RestoreChannels(const Raster& rgb, int channels) {
  return channels == 3 ? rgb : Luminance(rgb);
}

}  // namespace corruptbench::imaging
