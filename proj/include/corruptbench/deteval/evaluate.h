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
#ifndef CORRUPTBENCH_DETEVAL_EVALUATE_H_
#define CORRUPTBENCH_DETEVAL_EVALUATE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corruptbench/deteval/matching.h"
#include "corruptbench/deteval/types.h"

namespace corruptbench::deteval {

enum class Interpolation {
  kCoco101,   // mean precision at recall 0, 0.01, ..., 1
  kAllPoint,  // area under the monotone envelope (VOC2010+)
  kVoc11,     // mean of max precision at recall >= 0, 0.1, ..., 1 (VOC2007)
};

std::string_view InterpolationName(Interpolation interp);

// Average precision of one class. `labels` and `scores` are parallel; they
// are ranked by descending score here (stable), kIgnored entries are
// dropped. Returns nullopt when n_positives == 0, in which case the class
// does not contribute to any mean.
std::optional<double> AveragePrecision(std::span<const MatchLabel> labels,
                                       std::span<const double> scores, int n_positives,
                                       Interpolation interp);

enum class MetricMode { kPascal, kCoco };

struct EvalConfig {
  MetricMode mode = MetricMode::kCoco;
  std::vector<double> iou_thresholds;  // strictly increasing, each in (0, 1]
  Interpolation interpolation = Interpolation::kCoco101;
  int max_detections = 100;  // per image and category; <= 0 means unlimited

  // AP@[.50:.05:.95], 101-point, 100 detections.
  static EvalConfig Coco();
  // AP50, all-point by default or VOC2007 11-point, unlimited detections.
  static EvalConfig Pascal(bool voc07_11_point = false);

  void Validate() const;
};

struct EvalResult {
  double p = 0;  // percent
  // ap[t][k]: AP (fraction) at threshold t for the k-th category of
  // `categories`; nullopt for categories without positives.
  std::vector<std::vector<std::optional<double>>> ap;
  std::vector<CategoryId> categories;
  std::vector<double> iou_thresholds;
};

// Mean AP over categories (and thresholds) in percent. Throws
// InvalidArgument when the ground truth has no non-ignored box at all, or
// when detections reference unknown images or categories.
EvalResult Evaluate(const DetectionSet& dets, const GroundTruthSet& gts, const EvalConfig& cfg);

}  // namespace corruptbench::deteval

#endif  // CORRUPTBENCH_DETEVAL_EVALUATE_H_
