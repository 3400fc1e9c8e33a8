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
#include <algorithm>
#include <cmath>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/kernels.h"

namespace corruptbench::corruptions {

std::vector<double> PlasmaAmplitudeSchedule(int octaves, double decay, double initial) {
  std::vector<double> amps(std::max(octaves, 0));
  double a = initial;
  for (double& v : amps) {
    v = a;
    a *= decay;
  }
  return amps;
}

int PlasmaExponentFor(int size) {
  int n = 1;
  while ((1 << n) + 1 < size) ++n;
  return n;
}

PlasmaField DiamondSquare(int exponent, double decay, SeededRng& rng) {
  if (exponent < 1 || exponent > 14) throw InvalidArgument("plasma exponent must be in [1,14]");
  if (!(decay > 0.0 && decay < 1.0)) throw InvalidArgument("plasma decay must be in (0,1)");
  const int size = (1 << exponent) + 1;
  PlasmaField out{Raster(size, size, 1, 0.0), PlasmaAmplitudeSchedule(exponent, decay)};
  Raster& f = out.field;

  for (int k = 0; k < exponent; ++k) {
    const int step = 1 << (exponent - k);
    const int half = step / 2;
    const double amp = out.amplitudes[k];
    // Square step: centers of each step x step cell.
    for (int y = half; y < size; y += step) {
      for (int x = half; x < size; x += step) {
        const double avg = (f.at(x - half, y - half, 0) + f.at(x + half, y - half, 0) +
                            f.at(x - half, y + half, 0) + f.at(x + half, y + half, 0)) / 4.0;
        f.at(x, y, 0) = avg + rng.Uniform(-amp, amp);
      }
    }
    // Diamond step: edge midpoints, averaging the 3 or 4 neighbours in range.
    for (int y = 0; y < size; y += half) {
      for (int x = (y / half) % 2 == 0 ? half : 0; x < size; x += step) {
        double sum = 0.0;
        int n = 0;
        if (x - half >= 0) { sum += f.at(x - half, y, 0); ++n; }
        if (x + half < size) { sum += f.at(x + half, y, 0); ++n; }
        if (y - half >= 0) { sum += f.at(x, y - half, 0); ++n; }
        if (y + half < size) { sum += f.at(x, y + half, 0); ++n; }
        f.at(x, y, 0) = sum / n + rng.Uniform(-amp, amp);
      }
    }
  }

  const auto [lo, hi] = std::minmax_element(f.data().begin(), f.data().end());
  const double min = *lo, range = *hi - *lo;
  for (double& v : f.data()) v = range > 0.0 ? (v - min) / range : 0.0;
  return out;
}

Raster Fog(const Raster& in, const FogParams& p, SeededRng& rng) {
  const int w = in.width(), h = in.height(), ch = in.channels();
  const PlasmaField plasma = DiamondSquare(PlasmaExponentFor(std::max(w, h)), p.decay, rng);
  const double max_val = *std::max_element(in.data().begin(), in.data().end());
  const double scale = max_val / (max_val + p.strength);
  Raster out(w, h, ch);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double haze = p.strength * plasma.field.at(x, y, 0);
      for (int c = 0; c < ch; ++c) out.at(x, y, c) = (in.at(x, y, c) + haze) * scale;
    }
  }
  return out;
}

}  // namespace corruptbench::corruptions
