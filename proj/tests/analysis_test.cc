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
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>

#include <gtest/gtest.h>
#include <omp.h>

#include "corruptbench/analysis/impact.h"
#include "corruptbench/analysis/metrics.h"
#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/corruptions.h"
#include "corruptbench/imaging/io.h"
#include "test_support.h"

namespace corruptbench::analysis {
namespace {

using corruptions::Corruption;
using imaging::ImageBuffer;
using testing::RandomImage;
using testing::TestPattern;

TEST(RmseTest, HandExamples) {
  ImageBuffer a(8, 6, 3, 100), b(8, 6, 3, 110);
  EXPECT_DOUBLE_EQ(Rmse(a, b), 10.0);
  EXPECT_EQ(Rmse(a, a), 0.0);
  ImageBuffer checker(4, 4, 1), inverse(4, 4, 1);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      checker.at(x, y, 0) = (x + y) % 2 ? 255 : 0;
      inverse.at(x, y, 0) = 255 - checker.at(x, y, 0);
    }
  }
  EXPECT_DOUBLE_EQ(Rmse(checker, inverse), 255.0);
  // One sample of 4 off by 8: sqrt(64 / 4).
  ImageBuffer c(2, 2, 1, 0), d(2, 2, 1, 0);
  d.at(1, 1, 0) = 8;
  EXPECT_DOUBLE_EQ(Rmse(c, d), 4.0);
  EXPECT_THROW(Rmse(a, ImageBuffer(8, 6, 1)), InvalidArgument);
}

TEST(RmseTest, MetricProperties) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ImageBuffer a = RandomImage(9, 7, 3, s), b = RandomImage(9, 7, 3, s + 100), c = RandomImage(9, 7, 3, s + 200);
    EXPECT_DOUBLE_EQ(Rmse(a, b), Rmse(b, a));
    EXPECT_LE(Rmse(a, c), Rmse(a, b) + Rmse(b, c) + 1e-12);
  }
}

TEST(SsimTest, WindowIsNormalizedGaussian) {
  const auto w = SsimWindow1D();
  ASSERT_EQ(w.size(), 11u);
  EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-15);
  for (int i = 0; i < 11; ++i) {
    EXPECT_DOUBLE_EQ(w[i], w[10 - i]);
    EXPECT_NEAR(w[i] / w[5], std::exp(-(i - 5) * (i - 5) / (2 * 1.5 * 1.5)), 1e-14);
  }
  EXPECT_DOUBLE_EQ(kSsimC1, 6.5025);
  EXPECT_DOUBLE_EQ(kSsimC2, 58.5225);
}

TEST(SsimTest, IdenticalImagesGiveExactlyOne) {
  for (int c : {1, 3}) {
    const ImageBuffer img = RandomImage(40, 23, c, 9);
    EXPECT_EQ(Ssim(img, img), 1.0);
    EXPECT_EQ(reference::Ssim(img, img), 1.0);
  }
  const ImageBuffer flat(11, 11, 1, 0);
  EXPECT_EQ(Ssim(flat, flat), 1.0);
}

TEST(SsimTest, ConstantImagesClosedForm) {
  const double x = 100, y = 130;
  const double expected = (2 * x * y + kSsimC1) / (x * x + y * y + kSsimC1);
  EXPECT_NEAR(Ssim(ImageBuffer(20, 15, 3, 100), ImageBuffer(20, 15, 3, 130)), expected, 1e-12);
}

TEST(SsimTest, ShiftedRampClosedForm) {
  // a = 50 + 2x, b = a + 20: the contrast-structure term is exactly 1 and a
  // symmetric window over a linear ramp has mean equal to the centre value.
  const int w = 60, h = 15;
  ImageBuffer a(w, h, 1), b(w, h, 1);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      a.at(x, y, 0) = static_cast<std::uint8_t>(50 + 2 * x);
      b.at(x, y, 0) = static_cast<std::uint8_t>(70 + 2 * x);
    }
  }
  double sum = 0;
  int n = 0;
  for (int x0 = 5; x0 < w - 5; ++x0) {
    const double mu = 50 + 2 * x0, nu = mu + 20;
    sum += (2 * mu * nu + kSsimC1) / (mu * mu + nu * nu + kSsimC1);
    ++n;
  }
  EXPECT_NEAR(Ssim(a, b), sum / n, 1e-9);
  EXPECT_NEAR(reference::Ssim(a, b), sum / n, 1e-9);
}

TEST(SsimTest, ParallelMatchesReference) {
  const int saved = omp_get_max_threads();
  for (auto [w, h, c] : {std::tuple{11, 11, 1}, {37, 19, 3}, {64, 48, 3}, {12, 90, 1}}) {
    const ImageBuffer a = TestPattern(w, h, c), b = RandomImage(w, h, c, w * h);
    const double ref = reference::Ssim(a, b);
    omp_set_num_threads(1);
    const double one = Ssim(a, b);
    omp_set_num_threads(4);
    const double four = Ssim(a, b);
    EXPECT_NEAR(one, ref, 1e-12);
    EXPECT_EQ(one, four);
  }
  omp_set_num_threads(saved);
}

TEST(SsimTest, SymmetricBoundedAndValidated) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const ImageBuffer a = RandomImage(16, 16, 3, s), b = RandomImage(16, 16, 3, s + 50);
    EXPECT_NEAR(Ssim(a, b), Ssim(b, a), 1e-14);
    EXPECT_LE(Ssim(a, b), 1.0);
    EXPECT_GE(Ssim(a, b), -1.0);
  }
  EXPECT_THROW(Ssim(ImageBuffer(10, 20, 1), ImageBuffer(10, 20, 1)), InvalidArgument);
  EXPECT_THROW(Ssim(ImageBuffer(20, 20, 1), ImageBuffer(20, 20, 3)), InvalidArgument);
}

TEST(SsimTest, NoiseOrdering) {
  const ImageBuffer img = TestPattern(64, 64, 3);
  double prev_ssim = 1.0, prev_rmse = 0.0;
  for (int s = 1; s <= 5; ++s) {
    const ImageBuffer noisy = corruptions::Corrupt(img, Corruption::kGaussianNoise, s, 1);
    EXPECT_LT(Ssim(img, noisy), prev_ssim);
    EXPECT_GT(Rmse(img, noisy), prev_rmse);
    prev_ssim = Ssim(img, noisy);
    prev_rmse = Rmse(img, noisy);
  }
}

TEST(PearsonTest, HandExamples) {
  const std::vector<double> x = {1, 2, 3, 4, 5}, y = {2, 4, 5, 4, 5};
  // Sxy = 6, Sxx = 10, Syy = 6.
  EXPECT_NEAR(Pearson(x, y), 6 / std::sqrt(60.0), 1e-15);
  const std::vector<double> up = {3, 5, 7, 9, 11}, down = {-1, -2, -3, -4, -5};
  EXPECT_DOUBLE_EQ(Pearson(x, up), 1.0);
  EXPECT_DOUBLE_EQ(Pearson(x, down), -1.0);
  EXPECT_DOUBLE_EQ(Pearson(x, y), Pearson(y, x));
  EXPECT_THROW(Pearson(x, std::vector<double>{1, 2}), InvalidArgument);
  EXPECT_THROW(Pearson(std::vector<double>{1}, std::vector<double>{1}), InvalidArgument);
  EXPECT_THROW(Pearson(x, std::vector<double>{1, 2, NAN, 4, 5}), InvalidArgument);
  try {
    Pearson(x, std::vector<double>{7, 7, 7, 7, 7});
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("second"), std::string::npos);
  }
}

TEST(PearsonTest, InvariantUnderAffineMaps) {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> n(0, 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(12), y(12), z(12);
    for (int i = 0; i < 12; ++i) {
      x[i] = n(gen);
      y[i] = x[i] + n(gen);
      z[i] = -4 * y[i] + 9;
    }
    const double r = Pearson(x, y);
    EXPECT_LE(std::fabs(r), 1.0);
    EXPECT_NEAR(Pearson(x, z), -r, 1e-12);
  }
}

ImpactMeasurement Measured(Corruption c, double rmse, double ssim) {
  ImpactMeasurement m{c, {}, {}};
  for (int s = 0; s < 5; ++s) {
    m.rmse[s] = rmse + s - 2;  // mean stays at `rmse`
    m.ssim[s] = ssim;
  }
  return m;
}

TEST(ImpactTableTest, ThreeCorruptionOracle) {
  const std::vector<ImpactMeasurement> ms = {Measured(Corruption::kFog, 40, 0.9),
                                             Measured(Corruption::kImpulseNoise, 20, 0.3),
                                             Measured(Corruption::kPixelate, 10, 0.6)};
  benchmark::PerformanceGrid grid;
  grid.set_p_clean(80);
  const double p[3] = {60, 20, 40};  // rPC 75, 25, 50
  const char* names[3] = {"fog", "impulse_noise", "pixelate"};
  for (int k = 0; k < 3; ++k) {
    for (int s = 1; s <= 5; ++s) grid.Set(names[k], s, p[k] + (s - 3));
  }
  const ImpactTable t = BuildImpactTable(ms, grid);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0].corruption, "fog");
  EXPECT_EQ(t.rows[0].group, "weather");
  EXPECT_DOUBLE_EQ(t.rows[0].rpc, 75.0);
  EXPECT_DOUBLE_EQ(t.rows[1].rpc, 25.0);
  EXPECT_DOUBLE_EQ(t.rows[2].rmse, 10.0);
  // rpc (75, 25, 50) vs rmse (40, 20, 10): dx = (25, -25, 0), dy = (16.67, -3.33, -13.33).
  const double dy[3] = {40 - 70 / 3.0, 20 - 70 / 3.0, 10 - 70 / 3.0};
  const double sxy = 25 * dy[0] - 25 * dy[1];
  const double syy = dy[0] * dy[0] + dy[1] * dy[1] + dy[2] * dy[2];
  EXPECT_NEAR(t.pearson_rmse, sxy / std::sqrt(1250 * syy), 1e-12);
  // ssim (0.9, 0.3, 0.6) is an affine image of rpc: r = 1.
  EXPECT_NEAR(t.pearson_ssim, 1.0, 1e-12);

  const std::string csv = ImpactCsv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "corruption,group,rmse,ssim,rpc");
  EXPECT_NE(csv.find("fog,weather,40.000000,0.900000,75.000000\n"), std::string::npos);
  EXPECT_NE(csv.find("pearson_ssim,,,1.000000,\n"), std::string::npos);
}

TEST(ImpactTableTest, DegenerateInputsThrow) {
  const std::vector<ImpactMeasurement> ms = {Measured(Corruption::kFog, 40, 0.8),
                                             Measured(Corruption::kSnow, 20, 0.3)};
  benchmark::PerformanceGrid grid;
  grid.set_p_clean(80);
  grid.Set("fog", 1, 40);
  EXPECT_THROW(BuildImpactTable(ms, grid), InvalidArgument);  // snow has no cells
  grid.Set("snow", 1, 40);
  try {
    BuildImpactTable(ms, grid);
    FAIL();
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("constant"), std::string::npos) << e.what();
  }
  EXPECT_THROW(BuildImpactTable(ms, benchmark::PerformanceGrid{}), InvalidArgument);
}

TEST(MeasureImpactTest, DeterministicAndOrdered) {
  std::vector<CorpusImage> corpus = {{"a.png", TestPattern(40, 30, 3)}, {"b.png", RandomImage(40, 30, 3, 1)}};
  const Corruption which[] = {Corruption::kGaussianNoise, Corruption::kContrast};
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = MeasureImpact(corpus, which, 7);
  omp_set_num_threads(3);
  const auto three = MeasureImpact(corpus, which, 7);
  omp_set_num_threads(saved);
  ASSERT_EQ(one.size(), 2u);
  for (int k = 0; k < 2; ++k) {
    EXPECT_EQ(one[k].corruption, which[k]);
    EXPECT_EQ(one[k].rmse, three[k].rmse);
    EXPECT_EQ(one[k].ssim, three[k].ssim);
    for (int s = 1; s < 5; ++s) EXPECT_GT(one[k].rmse[s], one[k].rmse[s - 1]);
  }
  // Oracle for one cell: the corpus mean of direct measurements.
  double rmse = 0;
  for (const auto& img : corpus) {
    rmse += Rmse(img.image, corruptions::Corrupt(img.image, Corruption::kContrast, 2, 7, img.id));
  }
  EXPECT_NEAR(one[1].rmse[1], rmse / 2, 1e-12);
  EXPECT_NEAR(one[1].MeanRmse(),
              (one[1].rmse[0] + one[1].rmse[1] + one[1].rmse[2] + one[1].rmse[3] + one[1].rmse[4]) / 5, 1e-12);
}

TEST(LoadCorpusTest, RecursiveSortedAndValidated) {
  testing::TempDir dir("corpus");
  std::filesystem::create_directories(dir.path() / "sub");
  imaging::WriteImage(dir.path() / "z.png", TestPattern(12, 12, 3));
  imaging::WriteImage(dir.path() / "sub" / "a.jpg", TestPattern(12, 12, 1));
  { std::ofstream(dir.path() / "notes.txt") << "skip me"; }
  const auto corpus = LoadCorpus(dir.path());
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus[0].id, "sub/a.jpg");
  EXPECT_EQ(corpus[1].id, "z.png");
  testing::TempDir empty("corpus-empty");
  EXPECT_THROW(LoadCorpus(empty.path()), InvalidArgument);
}

}  // namespace
}  // namespace corruptbench::analysis
