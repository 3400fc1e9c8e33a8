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
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/kernels.h"
#include "corruptbench/imaging/io.h"
#include "corruptbench/imaging/resize.h"

namespace corruptbench::corruptions {
namespace {

// Row-major 2x3 affine map (x', y') = A (x, y, 1).
using Affine = std::array<double, 6>;

constexpr Affine kIdentity = {1, 0, 0, 0, 1, 0};

double Det3(const std::array<double, 9>& a) {
  return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
         a[2] * (a[3] * a[7] - a[4] * a[6]);
}

// Affine map taking the three `from` points onto the three `to` points
// (both packed as x0 y0 x1 y1 x2 y2). Collinear points give the identity.
Affine SolveAffine(const std::array<double, 6>& from, const std::array<double, 6>& to) {
  const std::array<double, 9> basis = {from[0], from[1], 1, from[2], from[3], 1, from[4], from[5], 1};
  const double det = Det3(basis);
  if (std::fabs(det) < 1e-12) return kIdentity;
  Affine m{};
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 3; ++col) {
      std::array<double, 9> replaced = basis;
      for (int i = 0; i < 3; ++i) replaced[3 * i + col] = to[2 * i + row];
      m[3 * row + col] = Det3(replaced) / det;
    }
  }
  return m;
}

// Smoothed uniform noise rescaled so its peak magnitude is `amplitude`.
Raster DisplacementField(int w, int h, double amplitude, double sigma, SeededRng& rng) {
  Raster field(w, h, 1);
  for (double& v : field.data()) v = rng.Uniform(-1.0, 1.0);
  if (amplitude == 0.0) {
    std::fill(field.data().begin(), field.data().end(), 0.0);
    return field;
  }
  field = imaging::GaussianFilter(field, sigma);
  double peak = 0.0;
  for (double v : field.data()) peak = std::max(peak, std::fabs(v));
  const double scale = peak > 0.0 ? amplitude / peak : 0.0;
  for (double& v : field.data()) v *= scale;
  return field;
}

struct AxisBins {
  std::vector<int> begin;                  // first source index per output bin
  std::vector<std::vector<double>> weights;  // coverage weights, normalized
};

// Box-filter bins for shrinking src samples to dst samples (dst <= src).
AxisBins AreaBins(int src, int dst) {
  AxisBins bins;
  bins.begin.resize(dst);
  bins.weights.resize(dst);
  const double scale = static_cast<double>(src) / dst;
  for (int i = 0; i < dst; ++i) {
    const double lo = i * scale, hi = (i + 1) * scale;
    const int first = static_cast<int>(std::floor(lo));
    const int last = std::min(src - 1, static_cast<int>(std::ceil(hi)) - 1);
    bins.begin[i] = first;
    for (int s = first; s <= last; ++s) {
      const double cover = std::min(hi, s + 1.0) - std::max(lo, static_cast<double>(s));
      bins.weights[i].push_back(std::max(cover, 0.0) / scale);
    }
  }
  return bins;
}

}  // namespace

Raster ElasticTransform(const Raster& in, const ElasticParams& p, SeededRng& rng) {
  if (!(p.amplitude >= 0.0 && p.smoothing > 0.0 && p.affine >= 0.0)) {
    throw InvalidArgument("elastic parameters must be non-negative with positive smoothing");
  }
  const int w = in.width(), h = in.height(), ch = in.channels();
  const double m = std::min(w, h);

  Affine affine = kIdentity;
  {
    const double cx = w / 2.0, cy = h / 2.0, sq = m / 3.0;
    const std::array<double, 6> from = {cx + sq, cy + sq, cx + sq, cy - sq, cx - sq, cy - sq};
    std::array<double, 6> to = from;
    // Fixed-length shift in a random direction per control point; a random
    // length made severity ordering depend on the draw.
    const double jitter = p.affine * m;
    for (int k = 0; k < 3; ++k) {
      const double theta = rng.Uniform(0.0, 2.0 * std::numbers::pi);
      to[2 * k] += jitter * std::cos(theta);
      to[2 * k + 1] += jitter * std::sin(theta);
    }
    if (jitter > 0.0) affine = SolveAffine(from, to);
  }
  const Raster dx = DisplacementField(w, h, p.amplitude * m, p.smoothing * m, rng);
  const Raster dy = DisplacementField(w, h, p.amplitude * m, p.smoothing * m, rng);

  Raster out(w, h, ch);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double qx = x + dx.at(x, y, 0), qy = y + dy.at(x, y, 0);
      const double sx = affine[0] * qx + affine[1] * qy + affine[2];
      const double sy = affine[3] * qx + affine[4] * qy + affine[5];
      for (int c = 0; c < ch; ++c) out.at(x, y, c) = imaging::SampleBilinear(in, sx, sy, c);
    }
  }
  return out;
}

Raster Pixelate(const Raster& in, double factor) {
  if (!(factor > 0.0 && factor <= 1.0)) throw InvalidArgument("pixelate factor must be in (0,1]");
  const int w = in.width(), h = in.height(), ch = in.channels();
  const int sw = std::clamp(static_cast<int>(std::lround(w * factor)), 1, w);
  const int sh = std::clamp(static_cast<int>(std::lround(h * factor)), 1, h);
  const AxisBins bx = AreaBins(w, sw), by = AreaBins(h, sh);

  Raster rows(sw, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int i = 0; i < sw; ++i) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (std::size_t k = 0; k < bx.weights[i].size(); ++k) {
          acc += bx.weights[i][k] * in.at(bx.begin[i] + static_cast<int>(k), y, c);
        }
        rows.at(i, y, c) = acc;
      }
    }
  }
  Raster small(sw, sh, ch);
  for (int j = 0; j < sh; ++j) {
    for (int i = 0; i < sw; ++i) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (std::size_t k = 0; k < by.weights[j].size(); ++k) {
          acc += by.weights[j][k] * rows.at(i, by.begin[j] + static_cast<int>(k), c);
        }
        small.at(i, j, c) = acc;
      }
    }
  }
  Raster out(w, h, ch);
  for (int y = 0; y < h; ++y) {
    const int sy = std::min(sh - 1, static_cast<int>((y + 0.5) * sh / h));
    for (int x = 0; x < w; ++x) {
      const int sx = std::min(sw - 1, static_cast<int>((x + 0.5) * sw / w));
      for (int c = 0; c < ch; ++c) out.at(x, y, c) = small.at(sx, sy, c);
    }
  }
  return out;
}

ImageBuffer JpegCompression(const ImageBuffer& in, int quality) {
  return imaging::DecodeImage(imaging::EncodeJpeg(in, quality));
}

}  // namespace corruptbench::corruptions
