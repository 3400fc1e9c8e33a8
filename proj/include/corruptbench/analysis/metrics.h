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
#ifndef CORRUPTBENCH_ANALYSIS_METRICS_H_
#define CORRUPTBENCH_ANALYSIS_METRICS_H_

#include <span>

#include "corruptbench/imaging/image.h"

namespace corruptbench::analysis {

using imaging::ImageBuffer;

// Root mean square difference over all samples, 0..255 scale. Throws
// InvalidArgument on shape mismatch or empty images.
double Rmse(const ImageBuffer& a, const ImageBuffer& b);

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimC1 = (0.01 * 255) * (0.01 * 255);
inline constexpr double kSsimC2 = (0.03 * 255) * (0.03 * 255);

// Gaussian-windowed SSIM (11x11, sigma 1.5, population moments), averaged
// over every fully contained window and then over channels. Throws
// InvalidArgument on shape mismatch or when either side is below 11.
double Ssim(const ImageBuffer& a, const ImageBuffer& b);

// Normalized 11-tap window shared by both SSIM implementations.
std::span<const double> SsimWindow1D();

// Sample Pearson correlation. Throws InvalidArgument for length mismatch,
// fewer than two points, non-finite values or a constant series.
double Pearson(std::span<const double> xs, std::span<const double> ys);

namespace reference {

// Direct 11x11 window sums, serial. Oracle for Ssim.
double Ssim(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace reference

}  // namespace corruptbench::analysis

#endif  // CORRUPTBENCH_ANALYSIS_METRICS_H_
