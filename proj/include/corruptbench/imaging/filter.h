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
#ifndef CORRUPTBENCH_IMAGING_FILTER_H_
#define CORRUPTBENCH_IMAGING_FILTER_H_

#include <vector>

#include "corruptbench/imaging/image.h"

namespace corruptbench::imaging {

// Mirror boundary without repeating the edge sample: for n = 4,
// index -1 -> 1, 4 -> 2 (d c b | a b c d | c b a). Valid for any integer i and
// n >= 1, including offsets many periods away.
int ReflectIndex(int i, int n);

// Normalized 1-D Gaussian taps over [-r, r] with r = ceil(3 sigma). Returns
// the single tap {1} for sigma == 0.
std::vector<double> GaussianKernel1D(double sigma);

// Dense 2-D weight table anchored at its center. Width and height are odd.
struct Kernel2D {
  int width = 1;
  int height = 1;
  std::vector<double> weights{1.0};  // row-major, height x width

  double at(int dx, int dy) const { return weights[dy * width + dx]; }
  double Sum() const;
};

// Indicator of x^2 + y^2 <= radius^2 on the integer lattice, normalized to
// unit sum.
Kernel2D DiskKernel(double radius);

// Separable Gaussian blur per channel with reflective boundaries. sigma must
// be >= 0; sigma == 0 returns the input unchanged. Rows are processed in
// parallel; results do not depend on the thread count.
Raster GaussianFilter(const Raster& in, double sigma);

// Correlation with a centered kernel, reflective boundaries, per channel.
// out(x, y) = sum_{i,j} k(i, j) in(x + i - kw/2, y + j - kh/2). Zero taps are
// skipped, so sparse kernels (lines, disks) stay cheap.
Raster Filter2D(const Raster& in, const Kernel2D& kernel);

// Serial, direct implementations used as test oracles and benchmark
// baselines. They share only ReflectIndex and the kernel builders with the
// parallel versions.
namespace reference {

// Full 2-D outer-product kernel applied directly (no separation).
Raster GaussianFilter(const Raster& in, double sigma);

Raster Filter2D(const Raster& in, const Kernel2D& kernel);

}  // namespace reference

}  // namespace corruptbench::imaging

#endif  // CORRUPTBENCH_IMAGING_FILTER_H_
