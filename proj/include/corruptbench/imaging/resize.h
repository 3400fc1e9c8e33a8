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
#ifndef CORRUPTBENCH_IMAGING_RESIZE_H_
#define CORRUPTBENCH_IMAGING_RESIZE_H_

#include "corruptbench/imaging/image.h"

namespace corruptbench::imaging {

// Bilinear resampling with pixel-center alignment:
//   src = (dst + 0.5) * (src_size / dst_size) - 0.5, clamped to the edge.
// Resizing to the source dimensions is the exact identity.
Raster ResizeBilinear(const Raster& in, int new_width, int new_height);
ImageBuffer ResizeBilinear(const ImageBuffer& in, int new_width, int new_height);

// Bilinear sample at a fractional position with reflective boundaries.
double SampleBilinear(const Raster& in, double x, double y, int c);

}  // namespace corruptbench::imaging

#endif  // CORRUPTBENCH_IMAGING_RESIZE_H_
