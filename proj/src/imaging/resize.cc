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
#include "corruptbench/imaging/resize.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "corruptbench/common/error.h"
#include "corruptbench/imaging/filter.h"

namespace corruptbench::imaging {
namespace {

struct AxisWeights {
  std::vector<int> lo;
  std::vector<int> hi;
  std::vector<double> frac;
};

AxisWeights ComputeAxis(int src, int dst) {
  AxisWeights a;
  a.lo.resize(dst);
  a.hi.resize(dst);
  a.frac.resize(dst);
  const double scale = static_cast<double>(src) / dst;
  for (int i = 0; i < dst; ++i) {
    double s = (i + 0.5) * scale - 0.5;
    s = std::clamp(s, 0.0, static_cast<double>(src - 1));
    const int lo = static_cast<int>(std::floor(s));
    a.lo[i] = lo;
    a.hi[i] = std::min(lo + 1, src - 1);
    a.frac[i] = s - lo;
  }
  return a;
}

}  // namespace

Raster ResizeBilinear(const Raster& in, int new_width, int new_height) {
  if (new_width < 1 || new_height < 1) {
    throw InvalidArgument("resize target dimensions must be >= 1");
  }
  if (new_width == in.width() && new_height == in.height()) return in;
  const AxisWeights ax = ComputeAxis(in.width(), new_width);
  const AxisWeights ay = ComputeAxis(in.height(), new_height);
  const int ch = in.channels();
  Raster out(new_width, new_height, ch);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < new_height; ++y) {
    const double fy = ay.frac[y];
    for (int x = 0; x < new_width; ++x) {
      const double fx = ax.frac[x];
      for (int c = 0; c < ch; ++c) {
        const double top = in.at(ax.lo[x], ay.lo[y], c) * (1 - fx) + in.at(ax.hi[x], ay.lo[y], c) * fx;
        const double bot = in.at(ax.lo[x], ay.hi[y], c) * (1 - fx) + in.at(ax.hi[x], ay.hi[y], c) * fx;
        out.at(x, y, c) = top * (1 - fy) + bot * fy;
      }
    }
  }
  return out;
}

ImageBuffer ResizeBilinear(const ImageBuffer& in, int new_width, int new_height) {
  if (new_width == in.width() && new_height == in.height()) return in;
  return FromFloat(ResizeBilinear(ToFloat(in), new_width, new_height));
}

double SampleBilinear(const Raster& in, double x, double y, int c) {
  const double fx0 = std::floor(x), fy0 = std::floor(y);
  const int x0 = static_cast<int>(fx0), y0 = static_cast<int>(fy0);
  const double fx = x - fx0, fy = y - fy0;
  const int w = in.width(), h = in.height();
  const int xa = ReflectIndex(x0, w), xb = ReflectIndex(x0 + 1, w);
  const int ya = ReflectIndex(y0, h), yb = ReflectIndex(y0 + 1, h);
  const double top = in.at(xa, ya, c) * (1 - fx) + in.at(xb, ya, c) * fx;
  const double bot = in.at(xa, yb, c) * (1 - fx) + in.at(xb, yb, c) * fx;
  return top * (1 - fy) + bot * fy;
}

}  // namespace corruptbench::imaging
