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
#include "corruptbench/imaging/image.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "corruptbench/common/error.h"

namespace corruptbench::imaging {
namespace {

void CheckShape(int width, int height, int channels) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " + std::to_string(width) +
                          "x" + std::to_string(height));
  }
  if (channels != 1 && channels != 3) {
    throw InvalidArgument("channel count must be 1 or 3, got " + std::to_string(channels));
  }
}

}  // namespace

ImageBuffer::ImageBuffer(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
  CheckShape(width, height, channels);
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

ImageBuffer::ImageBuffer(int width, int height, int channels, std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
  CheckShape(width, height, channels);
  if (data_.size() != static_cast<std::size_t>(width) * height * channels) {
    throw InvalidArgument("pixel data length does not match width*height*channels");
  }
}

Raster::Raster(int width, int height, int channels, double fill)
    : width_(width), height_(height), channels_(channels) {
  if (width < 1 || height < 1 || channels < 1) {
    throw InvalidArgument("raster dimensions must be positive");
  }
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

Raster Raster::Channel(int c) const {
  Raster plane(width_, height_, 1);
  const std::size_t n = pixel_count();
  for (std::size_t i = 0; i < n; ++i) plane.data_[i] = data_[i * channels_ + c];
  return plane;
}

void Raster::SetChannel(int c, const Raster& plane) {
  const std::size_t n = pixel_count();
  for (std::size_t i = 0; i < n; ++i) data_[i * channels_ + c] = plane.data_[i];
}

Raster ToFloat(const ImageBuffer& img) {
  Raster out(img.width(), img.height(), img.channels());
  auto src = img.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i] / 255.0;
  return out;
}

std::uint8_t Quantize(double unit_value) {
  if (!(unit_value > 0.0)) return 0;  // also maps NaN to 0
  if (unit_value >= 1.0) return 255;
  // std::nearbyint honours the default FE_TONEAREST mode: ties go to even.
  return static_cast<std::uint8_t>(std::nearbyint(unit_value * 255.0));
}

ImageBuffer FromFloat(const Raster& raster) {
  if (raster.channels() != 1 && raster.channels() != 3) {
    throw InvalidArgument("only 1- or 3-channel rasters can be quantized");
  }
  ImageBuffer out(raster.width(), raster.height(), raster.channels());
  auto src = raster.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = Quantize(src[i]);
  return out;
}

}  // namespace corruptbench::imaging
