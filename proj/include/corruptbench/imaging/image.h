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
#ifndef CORRUPTBENCH_IMAGING_IMAGE_H_
#define CORRUPTBENCH_IMAGING_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace corruptbench::imaging {

// Row-major, channel-interleaved 8-bit raster. Channels is 1 (gray) or 3 (RGB).
class ImageBuffer {
 public:
  ImageBuffer() = default;
  ImageBuffer(int width, int height, int channels, std::uint8_t fill = 0);
  ImageBuffer(int width, int height, int channels, std::vector<std::uint8_t> data);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  std::uint8_t& at(int x, int y, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  std::uint8_t at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::span<std::uint8_t> data() { return data_; }
  std::span<const std::uint8_t> data() const { return data_; }

  bool SameShape(const ImageBuffer& other) const {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<std::uint8_t> data_;
};

// Floating-point working raster with the same layout as ImageBuffer. Values are
// nominally in [0,1] but intermediate results may leave that range.
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, int channels, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }

  double& at(int x, int y, int c) {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double at(int x, int y, int c) const {
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  bool SameShape(const Raster& other) const {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }

  // Copies channel `c` into a single-channel raster.
  Raster Channel(int c) const;
  void SetChannel(int c, const Raster& plane);

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// v8 -> v8 / 255.
Raster ToFloat(const ImageBuffer& img);

// Clamps to [0,1], scales by 255 and rounds half-to-even.
ImageBuffer FromFloat(const Raster& raster);

// Round half-to-even on the 0..255 scale, clamped.
std::uint8_t Quantize(double unit_value);

}  // namespace corruptbench::imaging

#endif  // CORRUPTBENCH_IMAGING_IMAGE_H_
