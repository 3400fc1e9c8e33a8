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
#include "corruptbench/stylize/adain.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "corruptbench/common/error.h"

namespace corruptbench::stylize {
namespace {

void CheckShape(int channels, int height, int width) {
  if (channels < 1 || height < 1 || width < 1) throw InvalidArgument("feature tensor dimensions must be positive");
  if (static_cast<long long>(height) * width < 2) {
    throw InvalidArgument("feature tensor needs at least two spatial positions per channel");
  }
}

imaging::ImageBuffer PromoteRgb(const imaging::ImageBuffer& img) {
  if (img.channels() == 3) return img;
  imaging::ImageBuffer rgb(img.width(), img.height(), 3);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      for (int c = 0; c < 3; ++c) rgb.at(x, y, c) = img.at(x, y, 0);
    }
  }
  return rgb;
}

}  // namespace

FeatureTensor::FeatureTensor(int channels, int height, int width, std::vector<double> values)
    : channels_(channels), height_(height), width_(width), values_(std::move(values)) {
  CheckShape(channels, height, width);
  if (values_.size() != static_cast<std::size_t>(channels) * plane_size()) {
    throw InvalidArgument("feature tensor value count does not match its shape");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidArgument("feature tensor values must be finite");
  }
}

FeatureTensor::FeatureTensor(int channels, int height, int width, double fill)
    : FeatureTensor(channels, height, width,
                    std::vector<double>(static_cast<std::size_t>(std::max(channels, 0)) *
                                            std::max(height, 0) * std::max(width, 0),
                                        fill)) {}

std::vector<ChannelStat> ChannelStats(const FeatureTensor& t) {
  std::vector<ChannelStat> stats(t.channels());
  const std::size_t n = t.plane_size();
#pragma omp parallel for
  for (int c = 0; c < t.channels(); ++c) {
    const double* p = t.plane(c);
    double mean = 0;
    for (std::size_t i = 0; i < n; ++i) mean += p[i];
    mean /= n;
    // Two-pass variance; avoids cancellation on large offsets.
    double var = 0;
    for (std::size_t i = 0; i < n; ++i) var += (p[i] - mean) * (p[i] - mean);
    var /= n;
    stats[c] = {mean, std::sqrt(var + kAdainEpsilon)};
  }
  return stats;
}

FeatureTensor Adain(const FeatureTensor& content, const FeatureTensor& style, double alpha) {
  if (content.channels() != style.channels()) {
    throw InvalidArgument("adain: content has " + std::to_string(content.channels()) + " channels, style has " +
                          std::to_string(style.channels()));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("adain: alpha must lie in [0,1]");
  FeatureTensor out = content;
  if (alpha == 0.0) return out;
  const auto cs = ChannelStats(content);
  const auto ss = ChannelStats(style);
  const std::size_t n = content.plane_size();
#pragma omp parallel for
  for (int c = 0; c < content.channels(); ++c) {
    const double* in = content.plane(c);
    double* o = out.plane(c);
    const double gain = ss[c].std / cs[c].std;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = gain * (in[i] - cs[c].mean) + ss[c].mean;
      o[i] = alpha == 1.0 ? t : alpha * t + (1.0 - alpha) * in[i];
    }
  }
  return out;
}

FeatureTensor ToTensor(const imaging::ImageBuffer& img) {
  const int nc = img.channels();
  std::vector<double> v(static_cast<std::size_t>(nc) * img.width() * img.height());
  const std::size_t plane = static_cast<std::size_t>(img.width()) * img.height();
  const auto d = img.data();
  for (std::size_t i = 0; i < plane; ++i) {
    for (int c = 0; c < nc; ++c) v[c * plane + i] = d[i * nc + c];
  }
  return FeatureTensor(nc, img.height(), img.width(), std::move(v));
}

imaging::ImageBuffer ToImage(const FeatureTensor& t) {
  if (t.channels() != 1 && t.channels() != 3) throw InvalidArgument("only 1- or 3-channel tensors map to images");
  imaging::ImageBuffer img(t.width(), t.height(), t.channels());
  const std::size_t plane = t.plane_size();
  auto d = img.data();
  for (std::size_t i = 0; i < plane; ++i) {
    for (int c = 0; c < t.channels(); ++c) d[i * t.channels() + c] = imaging::Quantize(t.plane(c)[i] / 255.0);
  }
  return img;
}

imaging::ImageBuffer StylizeImage(const imaging::ImageBuffer& content, const imaging::ImageBuffer& style,
                                  double alpha) {
  if (content.channels() == style.channels()) return ToImage(Adain(ToTensor(content), ToTensor(style), alpha));
  return ToImage(Adain(ToTensor(PromoteRgb(content)), ToTensor(PromoteRgb(style)), alpha));
}

}  // namespace corruptbench::stylize
