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
#ifndef CORRUPTBENCH_CORRUPTIONS_KERNELS_H_
#define CORRUPTBENCH_CORRUPTIONS_KERNELS_H_

#include <vector>

#include "corruptbench/imaging/filter.h"
#include "corruptbench/imaging/image.h"
#include "corruptbench/imaging/rng.h"

// Parameterized corruption kernels on unit-interval rasters. These take the
// raw parameters; severity lookup lives in corruptions.h. Every kernel
// preserves width, height and channel count and accepts 1- or 3-channel
// input. Random draws are made serially in a fixed order so results do not
// depend on the OpenMP thread count.
namespace corruptbench::corruptions {

using imaging::ImageBuffer;
using imaging::Kernel2D;
using imaging::Raster;
using imaging::SeededRng;

// ---- noise ----

// x + N(0, sigma^2) per sample.
Raster GaussianNoise(const Raster& in, double sigma, SeededRng& rng);

// Poisson(x * photons) / photons per sample.
Raster ShotNoise(const Raster& in, double photons, SeededRng& rng);

// Each sample is replaced with probability `amount`, by 0 or 1 with equal odds.
Raster ImpulseNoise(const Raster& in, double amount, SeededRng& rng);

// x * (1 + N(0, sigma^2)).
Raster SpeckleNoise(const Raster& in, double sigma, SeededRng& rng);

// ---- blur ----

// Disk kernel of the given radius, softened by a Gaussian of alias_sigma
// (0 keeps the hard disk). Unit sum.
Kernel2D DefocusKernel(double radius, double alias_sigma);
Raster DefocusBlur(const Raster& in, double radius, double alias_sigma);

struct GlassBlurParams {
  double sigma;    // Gaussian applied before and after the shuffle
  int max_delta;   // swap neighborhood half-width in pixels
  int iterations;  // shuffle rounds
};
Raster GlassBlur(const Raster& in, const GlassBlurParams& p, SeededRng& rng);

// One-sided line of `length` taps along angle_deg (0 = +x, counter-clockwise
// with y pointing down the rows), Gaussian-weighted by distance from the
// anchor with the given sigma. Unit sum.
Kernel2D MotionKernel(int length, double sigma, double angle_deg);

// Length is clamped to the image diagonal.
Raster MotionBlur(const Raster& in, int length, double sigma, double angle_deg);

// 1.0, 1.0 + step, ... up to and including max_zoom (within step / 2).
std::vector<double> ZoomLadder(double max_zoom, double step);

// Equal-weight mean of the image zoomed about its center by every ladder
// factor.
Raster ZoomBlur(const Raster& in, const std::vector<double>& ladder);

// ---- weather ----

struct SnowParams {
  double mean;        // flake-field normal mean
  double stddev;      // flake-field normal stddev
  double zoom;        // flake-field zoom (bigger flakes)
  double threshold;   // flake-field values below this are dropped
  int blur_length;    // motion blur of the flake layer
  double blur_sigma;
  double blend;       // weight of the original image vs the whitened one
};
Raster Snow(const Raster& in, const SnowParams& p, SeededRng& rng);

struct FrostParams {
  double image_weight;
  double frost_weight;
};
// `texture` must be 3-channel; it is scaled up when smaller than the image
// and a random crop is blended in. Grayscale inputs use its luminance.
Raster Frost(const Raster& in, const FrostParams& p, const Raster& texture, SeededRng& rng);

// Diamond-square field on a (2^exponent + 1)^2 grid, normalized to [0,1].
// `amplitudes[k]` is the displacement half-range used at octave k.
struct PlasmaField {
  Raster field;
  std::vector<double> amplitudes;
};

// A_k = initial * decay^k for k = 0 .. octaves-1.
std::vector<double> PlasmaAmplitudeSchedule(int octaves, double decay, double initial = 1.0);

PlasmaField DiamondSquare(int exponent, double decay, SeededRng& rng);

// Smallest exponent n with 2^n + 1 >= size.
int PlasmaExponentFor(int size);

struct FogParams {
  double strength;  // haze weight added before renormalization
  double decay;     // plasma amplitude decay per octave, in (0, 1)
};
Raster Fog(const Raster& in, const FogParams& p, SeededRng& rng);

struct SpatterParams {
  double blob_sigma;  // smoothing of the liquid noise field, pixels
  double threshold;   // z-score above which liquid appears
  double opacity;
  bool mud;           // mud (opaque brown) instead of water
};
Raster Spatter(const Raster& in, const SpatterParams& p, SeededRng& rng);

// HSV value offset.
Raster Brightness(const Raster& in, double offset);

// (x - mean_c) * factor + mean_c per channel.
Raster Contrast(const Raster& in, double factor);

// HSV saturation S -> clip(S * gain + offset).
Raster Saturate(const Raster& in, double gain, double offset);

// ---- digital ----

struct ElasticParams {
  double amplitude;   // peak displacement, fraction of min(H, W)
  double smoothing;   // displacement-field Gaussian sigma, fraction of min(H, W)
  double affine;      // control-point shift length, fraction of min(H, W)
};
Raster ElasticTransform(const Raster& in, const ElasticParams& p, SeededRng& rng);

// Box-average down to round(factor * size) (at least 1 pixel per axis), then
// nearest-neighbour back up to the original size.
Raster Pixelate(const Raster& in, double factor);

ImageBuffer JpegCompression(const ImageBuffer& in, int quality);

}  // namespace corruptbench::corruptions

#endif  // CORRUPTBENCH_CORRUPTIONS_KERNELS_H_
