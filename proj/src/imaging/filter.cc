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
#include "corruptbench/imaging/filter.h"

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "corruptbench/common/error.h"

namespace corruptbench::imaging {
namespace {

struct Tap {
  int dx;
  int dy;
  double w;
};

std::vector<Tap> NonZeroTaps(const Kernel2D& k) {
  std::vector<Tap> taps;
  for (int j = 0; j < k.height; ++j) {
    for (int i = 0; i < k.width; ++i) {
      const double w = k.at(i, j);
      if (w != 0.0) taps.push_back({i - k.width / 2, j - k.height / 2, w});
    }
  }
  return taps;
}

void CheckSigma(double sigma) {
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("gaussian sigma must be finite and >= 0, got " + std::to_string(sigma));
  }
}

void CheckKernel(const Kernel2D& k) {
  if (k.width % 2 == 0 || k.height % 2 == 0 ||
      k.weights.size() != static_cast<std::size_t>(k.width) * k.height) {
    throw InvalidArgument("kernel must have odd dimensions and width*height weights");
  }
}

// table[i + radius] = ReflectIndex(i, n) for i in [-radius, n + radius).
std::vector<int> ReflectTable(int n, int radius);

}  // namespace

int ReflectIndex(int i, int n) {
  if (n == 1) return 0;
  const int period = 2 * (n - 1);
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - i;
}

std::vector<double> GaussianKernel1D(double sigma) {
  CheckSigma(sigma);
  if (sigma == 0.0) return {1.0};
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  for (int i = -radius; i <= radius; ++i) {
    taps[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
  }
  const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
  for (double& t : taps) t /= sum;
  return taps;
}

namespace {

std::vector<int> ReflectTable(int n, int radius) {
  std::vector<int> table(n + 2 * radius);
  for (int i = 0; i < static_cast<int>(table.size()); ++i) table[i] = ReflectIndex(i - radius, n);
  return table;
}

}  // namespace

double Kernel2D::Sum() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

Kernel2D DiskKernel(double radius) {
  if (!(radius >= 0.0)) throw InvalidArgument("disk radius must be >= 0");
  const int r = static_cast<int>(std::floor(radius));
  Kernel2D k;
  k.width = k.height = 2 * r + 1;
  k.weights.assign(static_cast<std::size_t>(k.width) * k.height, 0.0);
  int count = 0;
  for (int y = -r; y <= r; ++y) {
    for (int x = -r; x <= r; ++x) {
      if (x * x + y * y <= radius * radius) {
        k.weights[(y + r) * k.width + (x + r)] = 1.0;
        ++count;
      }
    }
  }
  for (double& w : k.weights) w /= count;
  return k;
}

Raster GaussianFilter(const Raster& in, double sigma) {
  const std::vector<double> taps = GaussianKernel1D(sigma);
  if (taps.size() == 1) return in;
  const int radius = static_cast<int>(taps.size() / 2);
  const int w = in.width(), h = in.height(), ch = in.channels();
  const std::vector<int> xs = ReflectTable(w, radius);
  const std::vector<int> ys = ReflectTable(h, radius);

  Raster tmp(w, h, ch);
  // Horizontal pass.
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int t = 0; t <= 2 * radius; ++t) acc += taps[t] * in.at(xs[x + t], y, c);
        tmp.at(x, y, c) = acc;
      }
    }
  }
  Raster out(w, h, ch);
  // Vertical pass.
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (int t = 0; t <= 2 * radius; ++t) acc += taps[t] * tmp.at(x, ys[y + t], c);
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

Raster Filter2D(const Raster& in, const Kernel2D& kernel) {
  CheckKernel(kernel);
  const std::vector<Tap> taps = NonZeroTaps(kernel);
  const int w = in.width(), h = in.height(), ch = in.channels();
  const int rx = kernel.width / 2, ry = kernel.height / 2;
  const std::vector<int> xs = ReflectTable(w, rx);
  const std::vector<int> ys = ReflectTable(h, ry);
  Raster out(w, h, ch);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < ch; ++c) {
        double acc = 0.0;
        for (const Tap& t : taps) acc += t.w * in.at(xs[x + rx + t.dx], ys[y + ry + t.dy], c);
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

namespace reference {

Raster GaussianFilter(const Raster& in, double sigma) {
  const std::vector<double> taps = GaussianKernel1D(sigma);
  const int radius = static_cast<int>(taps.size() / 2);
  const int w = in.width(), h = in.height(), ch = in.channels();
  Raster out(w, h, ch);
  for (int c = 0; c < ch; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int j = -radius; j <= radius; ++j) {
          for (int i = -radius; i <= radius; ++i) {
            acc += taps[j + radius] * taps[i + radius] *
                   in.at(ReflectIndex(x + i, w), ReflectIndex(y + j, h), c);
          }
        }
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

Raster Filter2D(const Raster& in, const Kernel2D& kernel) {
  CheckKernel(kernel);
  const int w = in.width(), h = in.height(), ch = in.channels();
  const int rx = kernel.width / 2, ry = kernel.height / 2;
  Raster out(w, h, ch);
  for (int c = 0; c < ch; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        double acc = 0.0;
        for (int j = 0; j < kernel.height; ++j) {
          for (int i = 0; i < kernel.width; ++i) {
            acc += kernel.at(i, j) *
                   in.at(ReflectIndex(x + i - rx, w), ReflectIndex(y + j - ry, h), c);
          }
        }
        out.at(x, y, c) = acc;
      }
    }
  }
  return out;
}

}  // namespace reference

}  // namespace corruptbench::imaging
