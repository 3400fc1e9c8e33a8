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
#include <numbers>
#include <utility>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/kernels.h"
#include "corruptbench/imaging/resize.h"

namespace corruptbench::corruptions {

using imaging::GaussianFilter;
using imaging::GaussianKernel1D;

Kernel2D DefocusKernel(double radius, double alias_sigma) {
  const Kernel2D disk = imaging::DiskKernel(radius);
  const std::vector<double> g = GaussianKernel1D(alias_sigma);
  if (g.size() == 1) return disk;
  // Full (zero-padded) convolution of the disk with the separable Gaussian.
  const int gr = static_cast<int>(g.size() / 2);
  Kernel2D k;
  k.width = disk.width + 2 * gr;
  k.height = disk.height + 2 * gr;
  k.weights.assign(static_cast<std::size_t>(k.width) * k.height, 0.0);
  for (int y = 0; y < disk.height; ++y) {
    for (int x = 0; x < disk.width; ++x) {
      const double w = disk.at(x, y);
      if (w == 0.0) continue;
      for (int j = 0; j < static_cast<int>(g.size()); ++j) {
        for (int i = 0; i < static_cast<int>(g.size()); ++i) {
          k.weights[(y + j) * k.width + (x + i)] += w * g[j] * g[i];
        }
      }
    }
  }
  const double sum = k.Sum();
  for (double& w : k.weights) w /= sum;
  return k;
}

Raster DefocusBlur(const Raster& in, double radius, double alias_sigma) {
  return imaging::Filter2D(in, DefocusKernel(radius, alias_sigma));
}

Raster GlassBlur(const Raster& in, const GlassBlurParams& p, SeededRng& rng) {
  Raster x = GaussianFilter(in, p.sigma);
  const int w = x.width(), h = x.height(), ch = x.channels();
  // Shrink the neighborhood until at least one interior pixel exists.
  const int delta = std::min(p.max_delta, (std::min(w, h) - 1) / 2);
  if (delta > 0) {
    const int span = 2 * delta + 1;
    for (int it = 0; it < p.iterations; ++it) {
      for (int y = h - 1 - delta; y >= delta; --y) {
        for (int xx = w - 1 - delta; xx >= delta; --xx) {
          const int dx = static_cast<int>(rng.Below(span)) - delta;
          const int dy = static_cast<int>(rng.Below(span)) - delta;
          for (int c = 0; c < ch; ++c) std::swap(x.at(xx, y, c), x.at(xx + dx, y + dy, c));
        }
      }
    }
  }
  return GaussianFilter(x, p.sigma);
}

Kernel2D MotionKernel(int length, double sigma, double angle_deg) {
  if (length < 1) throw InvalidArgument("motion blur length must be >= 1");
  if (!(sigma > 0.0)) throw InvalidArgument("motion blur sigma must be > 0");
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double cx = std::cos(theta), cy = -std::sin(theta);
  Kernel2D k;
  k.width = k.height = 2 * length + 1;
  k.weights.assign(static_cast<std::size_t>(k.width) * k.height, 0.0);
  for (int i = 0; i < length; ++i) {
    // Taps trail behind the anchor, so content is smeared along +angle.
    const int dx = static_cast<int>(std::lround(-i * cx));
    const int dy = static_cast<int>(std::lround(-i * cy));
    k.weights[(dy + length) * k.width + (dx + length)] += std::exp(-0.5 * i * i / (sigma * sigma));
  }
  const double sum = k.Sum();
  for (double& w : k.weights) w /= sum;
  return k;
}

Raster MotionBlur(const Raster& in, int length, double sigma, double angle_deg) {
  const double diagonal = std::hypot(in.width(), in.height());
  const int clamped = std::max(1, std::min(length, static_cast<int>(std::floor(diagonal))));
  return imaging::Filter2D(in, MotionKernel(clamped, sigma, angle_deg));
}

std::vector<double> ZoomLadder(double max_zoom, double step) {
  if (!(step > 0.0) || !(max_zoom >= 1.0)) throw InvalidArgument("invalid zoom ladder");
  std::vector<double> ladder;
  for (int i = 0;; ++i) {
    const double z = 1.0 + i * step;
    if (z > max_zoom + step / 2) break;
    ladder.push_back(z);
  }
  return ladder;
}

Raster ZoomBlur(const Raster& in, const std::vector<double>& ladder) {
  if (ladder.empty()) throw InvalidArgument("zoom ladder must not be empty");
  const int w = in.width(), h = in.height(), ch = in.channels();
  const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
  Raster out(w, h, ch);
  const double inv_count = 1.0 / static_cast<double>(ladder.size());
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (double z : ladder) {
          acc += z == 1.0 ? in.at(x, y, c)
                          : imaging::SampleBilinear(in, cx + (x - cx) / z, cy + (y - cy) / z, c);
        }
        out.at(x, y, c) = acc * inv_count;
      }
    }
  }
  return out;
}

}  // namespace corruptbench::corruptions
