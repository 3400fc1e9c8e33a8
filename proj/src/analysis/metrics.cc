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
#include "corruptbench/analysis/metrics.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "corruptbench/common/error.h"

namespace corruptbench::analysis {
namespace {

constexpr int kRadius = kSsimWindow / 2;

std::array<double, kSsimWindow> MakeWindow() {
  std::array<double, kSsimWindow> w{};
  double sum = 0;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double d = i - kRadius;
    w[i] = std::exp(-d * d / (2 * kSsimSigma * kSsimSigma));
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

const std::array<double, kSsimWindow>& Window() {
  static const std::array<double, kSsimWindow> w = MakeWindow();
  return w;
}

void CheckPair(const ImageBuffer& a, const ImageBuffer& b, const char* what) {
  if (!a.SameShape(b)) {
    throw InvalidArgument(std::string(what) + ": shape mismatch (" + std::to_string(a.width()) + "x" +
                          std::to_string(a.height()) + "x" + std::to_string(a.channels()) + " vs " +
                          std::to_string(b.width()) + "x" + std::to_string(b.height()) + "x" +
                          std::to_string(b.channels()) + ")");
  }
  if (a.empty()) throw InvalidArgument(std::string(what) + ": empty image");
}

void CheckSsimSize(const ImageBuffer& a, const ImageBuffer& b) {
  CheckPair(a, b, "ssim");
  if (a.width() < kSsimWindow || a.height() < kSsimWindow) {
    throw InvalidArgument("ssim: image smaller than the 11x11 window");
  }
}

double Combine(double mx, double my, double xx, double yy, double xy) {
  const double vx = xx - mx * mx;
  const double vy = yy - my * my;
  const double cov = xy - mx * my;
  return ((2 * mx * my + kSsimC1) * (2 * cov + kSsimC2)) /
         ((mx * mx + my * my + kSsimC1) * (vx + vy + kSsimC2));
}

}  // namespace

std::span<const double> SsimWindow1D() { return Window(); }

double Rmse(const ImageBuffer& a, const ImageBuffer& b) {
  CheckPair(a, b, "rmse");
  const auto da = a.data();
  const auto db = b.data();
  double sum = 0;
  for (std::size_t i = 0; i < da.size(); ++i) {
    const double d = static_cast<double>(da[i]) - db[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(da.size()));
}

double Ssim(const ImageBuffer& a, const ImageBuffer& b) {
  CheckSsimSize(a, b);
  const auto& w = Window();
  const int width = a.width();
  const int height = a.height();
  const int nc = a.channels();
  const int ow = width - kSsimWindow + 1;
  const int oh = height - kSsimWindow + 1;

  double total = 0;
  for (int c = 0; c < nc; ++c) {
    // Horizontal pass over the five moment maps, valid columns only.
    std::vector<std::array<double, 5>> rows(static_cast<std::size_t>(height) * ow);
#pragma omp parallel for
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < ow; ++x) {
        std::array<double, 5> m{};
        for (int k = 0; k < kSsimWindow; ++k) {
          const double p = a.at(x + k, y, c);
          const double q = b.at(x + k, y, c);
          m[0] += w[k] * p;
          m[1] += w[k] * q;
          m[2] += w[k] * p * p;
          m[3] += w[k] * q * q;
          m[4] += w[k] * p * q;
        }
        rows[static_cast<std::size_t>(y) * ow + x] = m;
      }
    }
    // Vertical pass; per-row partial sums keep the reduction order fixed.
    std::vector<double> row_sum(oh, 0.0);
#pragma omp parallel for
    for (int y = 0; y < oh; ++y) {
      double acc = 0;
      for (int x = 0; x < ow; ++x) {
        std::array<double, 5> m{};
        for (int k = 0; k < kSsimWindow; ++k) {
          const auto& r = rows[static_cast<std::size_t>(y + k) * ow + x];
          for (int j = 0; j < 5; ++j) m[j] += w[k] * r[j];
        }
        acc += Combine(m[0], m[1], m[2], m[3], m[4]);
      }
      row_sum[y] = acc;
    }
    double sum = 0;
    for (double v : row_sum) sum += v;
    total += sum / (static_cast<double>(ow) * oh);
  }
  return total / nc;
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidArgument("pearson: series lengths differ");
  if (xs.size() < 2) throw InvalidArgument("pearson: need at least two points");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) throw InvalidArgument("pearson: non-finite value");
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0) throw InvalidArgument("pearson: constant series (first argument)");
  if (syy == 0) throw InvalidArgument("pearson: constant series (second argument)");
  const double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

namespace reference {

double Ssim(const ImageBuffer& a, const ImageBuffer& b) {
  CheckSsimSize(a, b);
  const auto& w = Window();
  const int ow = a.width() - kSsimWindow + 1;
  const int oh = a.height() - kSsimWindow + 1;
  double total = 0;
  for (int c = 0; c < a.channels(); ++c) {
    double sum = 0;
    for (int y = 0; y < oh; ++y) {
      for (int x = 0; x < ow; ++x) {
        double mx = 0, my = 0, xx = 0, yy = 0, xy = 0;
        for (int j = 0; j < kSsimWindow; ++j) {
          for (int i = 0; i < kSsimWindow; ++i) {
            const double wt = w[j] * w[i];
            const double p = a.at(x + i, y + j, c);
            const double q = b.at(x + i, y + j, c);
            mx += wt * p;
            my += wt * q;
            xx += wt * p * p;
            yy += wt * q * q;
            xy += wt * p * q;
          }
        }
        sum += Combine(mx, my, xx, yy, xy);
      }
    }
    total += sum / (static_cast<double>(ow) * oh);
  }
  return total / a.channels();
}

}  // namespace reference

}  // namespace corruptbench::analysis
