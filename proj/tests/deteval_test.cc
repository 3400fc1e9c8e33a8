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
#include <random>

#include <gtest/gtest.h>

#include "json.hpp"

#include "corruptbench/common/error.h"
#include "corruptbench/deteval/coco_io.h"
#include "corruptbench/deteval/evaluate.h"
#include "corruptbench/deteval/matching.h"
#include "test_support.h"

namespace corruptbench::deteval {
namespace {

using nlohmann::json;
using testing::ReadText;
using testing::SourcePath;

constexpr double kTol = 1e-9;

BoundingBox Box(double x, double y, double w, double h) { return {x, y, w, h}; }

TEST(IouTest, HandExamples) {
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(0, 0, 10, 10)), 1.0);
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(20, 20, 5, 5)), 0.0);
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(10, 0, 10, 10)), 0.0);  // touching edges
  // Half overlap: 50 / 150.
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(5, 0, 10, 10)), 1.0 / 3.0);
  // Quarter overlap: 25 / 175.
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(5, 5, 10, 10)), 1.0 / 7.0);
  // Containment: 4 / 100.
  EXPECT_DOUBLE_EQ(Iou(Box(0, 0, 10, 10), Box(3, 3, 2, 2)), 0.04);
  EXPECT_EQ(Iou(Box(1, 1, 0, 0), Box(1, 1, 0, 0)), 0.0);
  EXPECT_DOUBLE_EQ(CrowdOverlap(Box(3, 3, 2, 2), Box(0, 0, 10, 10)), 1.0);
  EXPECT_DOUBLE_EQ(CrowdOverlap(Box(5, 0, 10, 10), Box(0, 0, 10, 10)), 0.5);
}

TEST(IouTest, SymmetricAndBounded) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0, 50);
  for (int i = 0; i < 1000; ++i) {
    const BoundingBox a = Box(u(gen), u(gen), u(gen), u(gen)), b = Box(u(gen), u(gen), u(gen), u(gen));
    const double v = Iou(a, b);
    EXPECT_EQ(v, Iou(b, a));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_LE(v, CrowdOverlap(a, b) + 1e-15);
  }
}

// Independent matcher: for each detection, scan every candidate and keep the
// lexicographic maximum of (overlap, -index).
std::vector<MatchLabel> OracleMatch(const std::vector<Detection>& dets, const std::vector<GroundTruth>& gts,
                                    double thr) {
  std::vector<bool> taken(gts.size(), false);
  std::vector<MatchLabel> out;
  for (const Detection& d : dets) {
    auto best = std::make_pair(-1.0, 0L);
    long best_idx = -1;
    for (std::size_t j = 0; j < gts.size(); ++j) {
      const GroundTruth& g = gts[j];
      if (g.category != d.category || g.ignore || g.crowd || taken[j]) continue;
      const double iou = Iou(d.box, g.box);
      if (iou < thr) continue;
      const auto key = std::make_pair(iou, -static_cast<long>(j));
      if (key > best) best = key, best_idx = static_cast<long>(j);
    }
    if (best_idx >= 0) {
      taken[best_idx] = true;
      out.push_back(MatchLabel::kTruePositive);
      continue;
    }
    best = {-1.0, 0L};
    for (std::size_t j = 0; j < gts.size(); ++j) {
      const GroundTruth& g = gts[j];
      if (g.category != d.category || !(g.ignore || g.crowd) || taken[j]) continue;
      const double ov = g.crowd ? CrowdOverlap(d.box, g.box) : Iou(d.box, g.box);
      if (ov < thr) continue;
      const auto key = std::make_pair(ov, -static_cast<long>(j));
      if (key > best) best = key, best_idx = static_cast<long>(j);
    }
    if (best_idx >= 0) {
      if (!gts[best_idx].crowd) taken[best_idx] = true;
      out.push_back(MatchLabel::kIgnored);
    } else {
      out.push_back(MatchLabel::kFalsePositive);
    }
  }
  return out;
}

TEST(MatchingTest, AgreesWithExhaustiveOracle) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> pos(0, 40), ext(4, 30), score(0, 1);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<GroundTruth> gts(gen() % 7);
    for (auto& g : gts) {
      g.category = static_cast<CategoryId>(gen() % 2);
      g.box = Box(pos(gen), pos(gen), ext(gen), ext(gen));
      const int kind = static_cast<int>(gen() % 6);
      g.crowd = kind == 0;
      g.ignore = kind <= 1;
      // Duplicate boxes force exact IoU ties.
      if (kind == 5 && &g != &gts.front()) g.box = gts.front().box;
    }
    std::vector<Detection> dets(gen() % 9);
    for (auto& d : dets) {
      d.category = static_cast<CategoryId>(gen() % 2);
      d.box = !gts.empty() && gen() % 2 ? gts[gen() % gts.size()].box : Box(pos(gen), pos(gen), ext(gen), ext(gen));
      d.box.x += (gen() % 3) * 0.5;
      d.score = score(gen);
    }
    std::vector<Detection> sorted;
    for (std::size_t i : ScoreOrder(dets)) sorted.push_back(dets[i]);
    for (double thr : {0.1, 0.5, 0.75}) {
      ASSERT_EQ(MatchDetections(sorted, gts, thr), OracleMatch(sorted, gts, thr)) << "trial " << trial;
    }
  }
}

TEST(MatchingTest, TiesGoToLowestIndexAndCrowdsAbsorbMany) {
  const std::vector<GroundTruth> twins = {{1, Box(0, 0, 10, 10)}, {1, Box(0, 0, 10, 10)}};
  const std::vector<Detection> one = {{1, Box(0, 0, 10, 10), 0.9}};
  EXPECT_EQ(MatchDetections(one, twins, 0.5), std::vector<MatchLabel>{MatchLabel::kTruePositive});

  GroundTruth crowd{1, Box(0, 0, 100, 100), true, true};
  const std::vector<Detection> many = {{1, Box(0, 0, 10, 10), 0.9}, {1, Box(50, 50, 10, 10), 0.8},
                                       {1, Box(90, 90, 20, 20), 0.7}};
  const auto labels = MatchDetections(many, std::vector<GroundTruth>{crowd}, 0.5);
  EXPECT_EQ(labels, (std::vector<MatchLabel>{MatchLabel::kIgnored, MatchLabel::kIgnored, MatchLabel::kFalsePositive}));

  GroundTruth ignore{1, Box(0, 0, 10, 10), true, false};
  const std::vector<Detection> two = {{1, Box(0, 0, 10, 10), 0.9}, {1, Box(0, 0, 10, 10), 0.8}};
  EXPECT_EQ(MatchDetections(two, std::vector<GroundTruth>{ignore}, 0.5),
            (std::vector<MatchLabel>{MatchLabel::kIgnored, MatchLabel::kFalsePositive}));
}

TEST(ScoreOrderTest, StableDescending) {
  const std::vector<Detection> d = {{0, {}, 0.5}, {0, {}, 0.9}, {0, {}, 0.5}, {0, {}, 0.1}};
  EXPECT_EQ(ScoreOrder(d), (std::vector<std::size_t>{1, 0, 2, 3}));
}

using L = MatchLabel;

TEST(AveragePrecisionTest, HandEnvelopes) {
  const std::vector<L> labels = {L::kTruePositive, L::kFalsePositive, L::kTruePositive};
  const std::vector<double> scores = {0.9, 0.8, 0.7};
  // recall .5 .5 1, precision 1 .5 2/3; envelope 1, 2/3, 2/3.
  EXPECT_NEAR(*AveragePrecision(labels, scores, 2, Interpolation::kAllPoint), 0.5 + 0.5 * 2 / 3.0, 1e-15);
  EXPECT_NEAR(*AveragePrecision(labels, scores, 2, Interpolation::kCoco101), (51 + 50 * 2 / 3.0) / 101, 1e-15);
  EXPECT_NEAR(*AveragePrecision(labels, scores, 2, Interpolation::kVoc11), (6 + 5 * 2 / 3.0) / 11, 1e-15);

  const std::vector<L> perfect = {L::kTruePositive, L::kTruePositive};
  for (auto i : {Interpolation::kAllPoint, Interpolation::kCoco101, Interpolation::kVoc11}) {
    EXPECT_DOUBLE_EQ(*AveragePrecision(perfect, std::vector<double>{2, 1}, 2, i), 1.0);
    EXPECT_EQ(*AveragePrecision({}, {}, 3, i), 0.0);
    EXPECT_FALSE(AveragePrecision({}, {}, 0, i).has_value());
  }
  // Ignored entries vanish from the ranking.
  const std::vector<L> with_ignored = {L::kIgnored, L::kTruePositive, L::kFalsePositive, L::kTruePositive};
  EXPECT_DOUBLE_EQ(*AveragePrecision(with_ignored, std::vector<double>{1, .9, .8, .7}, 2, Interpolation::kAllPoint),
                   *AveragePrecision(labels, scores, 2, Interpolation::kAllPoint));
  // Ranking happens inside: shuffled input, same answer.
  EXPECT_DOUBLE_EQ(
      *AveragePrecision(std::vector<L>{L::kTruePositive, L::kTruePositive, L::kFalsePositive},
                        std::vector<double>{0.7, 0.9, 0.8}, 2, Interpolation::kCoco101),
      *AveragePrecision(labels, scores, 2, Interpolation::kCoco101));
  // 11-point levels are t * 0.1: a recall of exactly 3/10 misses the 0.3 level.
  std::vector<L> three(3, L::kTruePositive);
  EXPECT_NEAR(*AveragePrecision(three, std::vector<double>{3, 2, 1}, 10, Interpolation::kVoc11), 3 / 11.0, 1e-15);
  EXPECT_THROW(AveragePrecision(labels, std::vector<double>{1}, 2, Interpolation::kAllPoint), InvalidArgument);
}

TEST(EvalConfigTest, Presets) {
  const EvalConfig coco = EvalConfig::Coco();
  ASSERT_EQ(coco.iou_thresholds.size(), 10u);
  for (int i = 0; i < 10; ++i) EXPECT_NEAR(coco.iou_thresholds[i], 0.5 + 0.05 * i, 1e-15);
  EXPECT_EQ(coco.iou_thresholds.back(), 0.95);
  EXPECT_EQ(coco.max_detections, 100);
  EXPECT_EQ(coco.interpolation, Interpolation::kCoco101);
  const EvalConfig pascal = EvalConfig::Pascal();
  EXPECT_EQ(pascal.iou_thresholds, std::vector<double>{0.5});
  EXPECT_EQ(pascal.interpolation, Interpolation::kAllPoint);
  EXPECT_EQ(EvalConfig::Pascal(true).interpolation, Interpolation::kVoc11);
  EvalConfig bad = coco;
  bad.iou_thresholds = {0.5, 0.5};
  EXPECT_THROW(bad.Validate(), InvalidArgument);
  bad.iou_thresholds = {0.0};
  EXPECT_THROW(bad.Validate(), InvalidArgument);
  bad.iou_thresholds = {};
  EXPECT_THROW(bad.Validate(), InvalidArgument);
}

struct Case {
  GroundTruthSet gts;
  DetectionSet dets;
};

Case FromJson(const json& gt, const json& dets) {
  Case c;
  c.gts = ParseGroundTruth(gt.dump(), "gt");
  c.dets = ParseDetections(dets.dump(), c.gts, "dets");
  return c;
}

TEST(EvaluateTest, PascalFixtureMatchesReference) {
  const auto gts = LoadGroundTruth(SourcePath("tests/data/pascal2/gt.json"));
  const auto dets = LoadDetections(SourcePath("tests/data/pascal2/dets.json"), gts);
  const json expected = json::parse(ReadText(SourcePath("tests/data/pascal2/expected.json")));
  const EvalResult all = Evaluate(dets, gts, EvalConfig::Pascal());
  EXPECT_NEAR(all.p, expected["all_point"]["p"].get<double>(), kTol);
  const EvalResult voc = Evaluate(dets, gts, EvalConfig::Pascal(true));
  EXPECT_NEAR(voc.p, expected["voc07"]["p"].get<double>(), kTol);
  for (std::size_t k = 0; k < all.categories.size(); ++k) {
    const std::string key = std::to_string(all.categories[k]);
    EXPECT_NEAR(100 * *all.ap[0][k], expected["all_point"]["per_category"][key].get<double>(), kTol);
    EXPECT_NEAR(100 * *voc.ap[0][k], expected["voc07"]["per_category"][key].get<double>(), kTol);
  }
  EXPECT_NEAR(Evaluate(dets, gts, EvalConfig::Coco()).p, expected["coco"]["p"].get<double>(), kTol);
}

TEST(EvaluateTest, RandomCasesMatchFrozenReference) {
  const json cases = json::parse(ReadText(SourcePath("tests/data/crosscheck.json")));
  ASSERT_EQ(cases.size(), 40u);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case c = FromJson(cases[i]["gt"], cases[i]["dets"]);
    EXPECT_NEAR(Evaluate(c.dets, c.gts, EvalConfig::Coco()).p, cases[i]["coco"].get<double>(), kTol) << i;
    EXPECT_NEAR(Evaluate(c.dets, c.gts, EvalConfig::Pascal()).p, cases[i]["pascal"].get<double>(), kTol) << i;
    EXPECT_NEAR(Evaluate(c.dets, c.gts, EvalConfig::Pascal(true)).p, cases[i]["voc07"].get<double>(), kTol) << i;
  }
}

TEST(EvaluateTest, CocoIsMeanOfPerThresholdResults) {
  const json cases = json::parse(ReadText(SourcePath("tests/data/crosscheck.json")));
  for (std::size_t i = 0; i < 10; ++i) {
    const Case c = FromJson(cases[i]["gt"], cases[i]["dets"]);
    const EvalResult full = Evaluate(c.dets, c.gts, EvalConfig::Coco());
    for (std::size_t t = 0; t < full.iou_thresholds.size(); ++t) {
      EvalConfig one = EvalConfig::Coco();
      one.iou_thresholds = {full.iou_thresholds[t]};
      const EvalResult single = Evaluate(c.dets, c.gts, one);
      for (std::size_t k = 0; k < full.categories.size(); ++k) {
        ASSERT_EQ(single.ap[0][k].has_value(), full.ap[t][k].has_value());
        if (full.ap[t][k]) {
          EXPECT_EQ(*single.ap[0][k], *full.ap[t][k]);
        }
      }
    }
  }
}

TEST(EvaluateTest, InvariantUnderScoreRescalingAndInputOrder) {
  const json cases = json::parse(ReadText(SourcePath("tests/data/crosscheck.json")));
  std::mt19937_64 gen(5);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case c = FromJson(cases[i]["gt"], cases[i]["dets"]);
    DetectionSet scaled = c.dets, shuffled = c.dets;
    for (auto& [image, list] : scaled.images) {
      for (auto& d : list) d.score = 3.0 * d.score + 7.0;
    }
    for (auto& [image, list] : shuffled.images) std::shuffle(list.begin(), list.end(), gen);
    for (const EvalConfig& cfg : {EvalConfig::Coco(), EvalConfig::Pascal()}) {
      const double p = Evaluate(c.dets, c.gts, cfg).p;
      EXPECT_NEAR(Evaluate(scaled, c.gts, cfg).p, p, 1e-12) << i;
      EXPECT_NEAR(Evaluate(shuffled, c.gts, cfg).p, p, 1e-12) << i;
    }
  }
}

TEST(EvaluateTest, LowestScoredFalsePositiveNeverHelps) {
  const json cases = json::parse(ReadText(SourcePath("tests/data/crosscheck.json")));
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case c = FromJson(cases[i]["gt"], cases[i]["dets"]);
    DetectionSet more = c.dets;
    const CategoryId cat = *c.gts.categories.begin();
    // Far outside every image: can only be a false positive.
    more.images[c.gts.images.begin()->first].push_back({cat, Box(-1000, -1000, 5, 5), -1.0});
    for (const EvalConfig& cfg : {EvalConfig::Coco(), EvalConfig::Pascal(), EvalConfig::Pascal(true)}) {
      EXPECT_LE(Evaluate(more, c.gts, cfg).p, Evaluate(c.dets, c.gts, cfg).p + 1e-12) << i;
    }
  }
}

TEST(EvaluateTest, PerfectDetectionsScoreHundred) {
  const json cases = json::parse(ReadText(SourcePath("tests/data/crosscheck.json")));
  for (std::size_t i = 0; i < 10; ++i) {
    const Case c = FromJson(cases[i]["gt"], json::array());
    DetectionSet oracle;
    for (const auto& [image, list] : c.gts.images) {
      for (const GroundTruth& g : list) {
        if (!g.ignore) oracle.images[image].push_back({g.category, g.box, 1.0});
      }
    }
    EXPECT_DOUBLE_EQ(Evaluate(oracle, c.gts, EvalConfig::Coco()).p, 100.0) << i;
    EXPECT_DOUBLE_EQ(Evaluate(oracle, c.gts, EvalConfig::Pascal()).p, 100.0) << i;
    EXPECT_EQ(Evaluate({}, c.gts, EvalConfig::Coco()).p, 0.0);
  }
}

TEST(EvaluateTest, DetectionCapApplies) {
  GroundTruthSet gts;
  gts.categories = {1};
  gts.images[1] = {{1, Box(0, 0, 10, 10)}};
  DetectionSet dets;
  for (int i = 0; i < 5; ++i) dets.images[1].push_back({1, Box(100, 100, 5, 5), 0.9});
  dets.images[1].push_back({1, Box(0, 0, 10, 10), 0.1});
  EvalConfig cfg = EvalConfig::Pascal();
  EXPECT_NEAR(Evaluate(dets, gts, cfg).p, 100.0 / 6, 1e-12);
  cfg.max_detections = 5;
  EXPECT_EQ(Evaluate(dets, gts, cfg).p, 0.0);
}

TEST(EvaluateTest, RejectsDegenerateInput) {
  GroundTruthSet gts;
  gts.categories = {1};
  gts.images[1] = {{1, Box(0, 0, 10, 10), true, true}};
  EXPECT_THROW(Evaluate({}, gts, EvalConfig::Coco()), InvalidArgument);
  gts.images[1].push_back({1, Box(0, 0, 5, 5)});
  DetectionSet bad;
  bad.images[2] = {{1, Box(0, 0, 1, 1), 1.0}};
  EXPECT_THROW(Evaluate(bad, gts, EvalConfig::Coco()), InvalidArgument);
}

std::string ErrorOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  return "";
}

TEST(CocoIoTest, ParsesFlagsAndEmptyImages) {
  const auto gts = ParseGroundTruth(R"({"images":[{"id":1},{"id":2}],"categories":[{"id":3}],
      "annotations":[{"image_id":1,"category_id":3,"bbox":[1,2,3,4]},
                     {"image_id":1,"category_id":3,"bbox":[0,0,9,9],"iscrowd":1},
                     {"image_id":1,"category_id":3,"bbox":[0,0,9,9],"ignore":true}]})");
  ASSERT_EQ(gts.images.size(), 2u);
  EXPECT_TRUE(gts.images.at(2).empty());
  const auto& a = gts.images.at(1);
  EXPECT_EQ(a[0].box.w, 3);
  EXPECT_FALSE(a[0].ignore);
  EXPECT_TRUE(a[1].crowd && a[1].ignore);
  EXPECT_TRUE(a[2].ignore && !a[2].crowd);
}

TEST(CocoIoTest, ErrorsNameSourceAndField) {
  const std::string base = R"({"images":[{"id":1}],"categories":[{"id":3}],"annotations":[)";
  EXPECT_EQ(ErrorOf([&] { ParseGroundTruth(base + R"({"image_id":1,"category_id":3,"bbox":[1,2,3]}]})", "gt.json"); }),
            "gt.json: annotations[0].bbox: expected 4 numbers");
  EXPECT_EQ(ErrorOf([&] { ParseGroundTruth(base + R"({"image_id":9,"category_id":3,"bbox":[1,2,3,4]}]})", "gt.json"); }),
            "gt.json: annotations[0].image_id: unknown image id 9");
  EXPECT_EQ(ErrorOf([&] { ParseGroundTruth(base + R"({"category_id":3,"bbox":[1,2,3,4]}]})", "gt.json"); }),
            "gt.json: annotations[0].image_id: missing");
  EXPECT_EQ(ErrorOf([&] { ParseGroundTruth(base + R"({"image_id":1,"category_id":3,"bbox":[1,2,-3,4]}]})", "gt.json"); }),
            "gt.json: annotations[0].bbox: negative width or height");
  EXPECT_NE(ErrorOf([&] { ParseGroundTruth("{oops", "gt.json"); }).find("gt.json: invalid JSON"), std::string::npos);

  const auto gts = ParseGroundTruth(base + "]}");
  EXPECT_EQ(ErrorOf([&] { ParseDetections(R"([{"image_id":1,"category_id":3,"bbox":[1,2,3,4]}])", gts, "d.json"); }),
            "d.json: [0].score: missing");
  EXPECT_EQ(ErrorOf([&] {
              ParseDetections(R"([{"image_id":1,"category_id":3,"bbox":[1,2,3,4],"score":1},
                                  {"image_id":1,"category_id":4,"bbox":[1,2,3,4],"score":1}])", gts, "d.json");
            }),
            "d.json: [1].category_id: unknown category 4");
  EXPECT_EQ(ErrorOf([&] { ParseDetections(R"({"x":1})", gts, "d.json"); }),
            "d.json: <root>: expected an array of detections");
  EXPECT_THROW(LoadGroundTruth("/nonexistent/gt.json"), IoError);
}

}  // namespace
}  // namespace corruptbench::deteval
