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
#ifndef CORRUPTBENCH_IMAGING_COLOR_H_
#define CORRUPTBENCH_IMAGING_COLOR_H_

#include "corruptbench/imaging/image.h"

namespace corruptbench::imaging {

// Hexcone HSV. Input is a 3-channel raster in [0,1]; output channels are
// (H, S, V) with H in [0,1) and S, V in [0,1].
Raster RgbToHsv(const Raster& rgb);
Raster HsvToRgb(const Raster& hsv);

// BT.601 luma, 0.299 R + 0.587 G + 0.114 B.
Raster Luminance(const Raster& rgb);

// Gray -> RGB by copying the single channel three times.
Raster ReplicateToRgb(const Raster& gray);

// Returns rgb unchanged when it already has 3 channels.
Raster AsRgb(const Raster& raster);

// Inverse of AsRgb for a result computed on the replicated image: keeps RGB
// when `channels` is 3, otherwise collapses to luminance.
Raster RestoreChannels(const Raster& rgb, int channels);

}  // namespace corruptbench::imaging

#endif  // CORRUPTBENCH_IMAGING_COLOR_H_
