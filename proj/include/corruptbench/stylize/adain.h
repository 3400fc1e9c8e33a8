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
#ifndef CORRUPTBENCH_STYLIZE_ADAIN_H_
#define CORRUPTBENCH_STYLIZE_ADAIN_H_

#include <vector>

#include "corruptbench/imaging/image.h"

namespace corruptbench::stylize {

inline constexpr double kAdainEpsilon = 1e-5;

// Channel-major (C x H x W) real tensor. H * W >= 2, all values finite.
class FeatureTensor {
 public:
  FeatureTensor(int channels, int height, int width, std::vector<double> values);
  FeatureTensor(int channels, int height, int width, double fill = 0.0);

  int channels() const { return channels_; }
  int height() const { return height_; }
  int width() const { return width_; }
  std::size_t plane_size() const { return static_cast<std::size_t>(height_) * width_; }

  double* plane(int c) { return values_.data() + c * plane_size(); }
  const double* plane(int c) const { return values_.data() + c * plane_size(); }
  const std::vector<double>& values() const { return values_; }

 private:
  int channels_;
  int height_;
  int width_;
  std::vector<double> values_;
};

struct ChannelStat {
  double mean = 0;
  double std = 0;  // sqrt(population variance + epsilon)
};

std::vector<ChannelStat> ChannelStats(const FeatureTensor& t);

// Per channel: sigma_s (x - mu_c) / sigma_c + mu_s, then
// alpha * that + (1 - alpha) * content. alpha == 0 returns the content
// unchanged. Throws InvalidArgument on channel-count mismatch or alpha
// outside [0,1].
FeatureTensor Adain(const FeatureTensor& content, const FeatureTensor& style, double alpha = 1.0);

// Pixel-space mode: the raw image (0..255 values) stands in for the feature
// map. Gray inputs are promoted to RGB when the other side is RGB.
FeatureTensor ToTensor(const imaging::ImageBuffer& img);
imaging::ImageBuffer ToImage(const FeatureTensor& t);
imaging::ImageBuffer StylizeImage(const imaging::ImageBuffer& content, const imaging::ImageBuffer& style,
                                  double alpha);

}  // namespace corruptbench::stylize

#endif  // CORRUPTBENCH_STYLIZE_ADAIN_H_
