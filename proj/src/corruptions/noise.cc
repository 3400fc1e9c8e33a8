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
#include <cstddef>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/kernels.h"

namespace corruptbench::corruptions {

Raster GaussianNoise(const Raster& in, double sigma, SeededRng& rng) {
  if (!(sigma >= 0.0)) throw InvalidArgument("gaussian noise sigma must be >= 0");
  Raster out = in;
  if (sigma == 0.0) return out;
  for (double& v : out.data()) v += sigma * rng.Normal();
  return out;
}

Raster ShotNoise(const Raster& in, double photons, SeededRng& rng) {
  if (!(photons > 0.0)) throw InvalidArgument("shot noise photon budget must be > 0");
  Raster out = in;
  for (double& v : out.data()) {
    const double lambda = v > 0.0 ? v * photons : 0.0;
    v = static_cast<double>(rng.Poisson(lambda)) / photons;
  }
  return out;
}

Raster ImpulseNoise(const Raster& in, double amount, SeededRng& rng) {
  if (!(amount >= 0.0 && amount <= 1.0)) throw InvalidArgument("impulse amount must be in [0,1]");
  Raster out = in;
  for (double& v : out.data()) {
    if (rng.Uniform() < amount) v = rng.Uniform() < 0.5 ? 0.0 : 1.0;
  }
  return out;
}

Raster SpeckleNoise(const Raster& in, double sigma, SeededRng& rng) {
  if (!(sigma >= 0.0)) throw InvalidArgument("speckle sigma must be >= 0");
  Raster out = in;
  if (sigma == 0.0) return out;
  for (double& v : out.data()) v += v * sigma * rng.Normal();
  return out;
}

}  // namespace corruptbench::corruptions
