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
#include "corruptbench/deteval/evaluate.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "corruptbench/common/error.h"

namespace corruptbench::deteval {
namespace {

// Evenly spaced grid computed as start + i * step with the endpoint pinned,
// so values agree bit-for-bit with the usual numpy-based evaluators.
std::vector<double> Linspace(double start, double stop, int num) {
  std::vector<double> v(num);
  const double step = (stop - start) / (num - 1);
  for (int i = 0; i < num; ++i) v[i] = i * step + start;
  v[num - 1] = stop;
  return v;
}

const std::vector<double>& RecallLevels() {
  static const std::vector<double> levels = Linspace(0.0, 1.0, 101);
  return levels;
}

struct Curve {
  std::vector<double> recall;
  std::vector<double> precision;
};

Curve BuildCurve(std::span<const MatchLabel> labels, std::span<const double> scores,
                 int n_positives) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != MatchLabel::kIgnored) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  Curve c;
  double tp = 0, fp = 0;
  for (std::size_t i : order) {
    (labels[i] == MatchLabel::kTruePositive ? tp : fp) += 1;
    c.recall.push_back(tp / n_positives);
    c.precision.push_back(tp / (tp + fp));
  }
  return c;
}

}  // namespace

std::string_view InterpolationName(Interpolation interp) {
  switch (interp) {
    case Interpolation::kCoco101: return "coco-101";
    case Interpolation::kAllPoint: return "all-point";
    case Interpolation::kVoc11: return "voc07-11-point";
  }
  return "unknown";
}

std::optional<double> AveragePrecision(std::span<const MatchLabel> labels,
                                       std::span<const double> scores, int n_positives,
                                       Interpolation interp) {
  if (labels.size() != scores.size()) throw InvalidArgument("labels and scores differ in length");
  if (n_positives <= 0) return std::nullopt;
  Curve c = BuildCurve(labels, scores, n_positives);
  const std::size_t n = c.precision.size();

  switch (interp) {
    case Interpolation::kCoco101: {
      // Monotone envelope from the right, then sample at fixed recalls.
      for (std::size_t i = n; i-- > 1;) c.precision[i - 1] = std::max(c.precision[i - 1], c.precision[i]);
      double sum = 0;
      for (const double level : RecallLevels()) {
        const auto it = std::lower_bound(c.recall.begin(), c.recall.end(), level);
        if (it != c.recall.end()) sum += c.precision[it - c.recall.begin()];
      }
      return sum / 101.0;
    }
    case Interpolation::kAllPoint: {
      std::vector<double> mrec{0.0}, mpre{0.0};
      mrec.insert(mrec.end(), c.recall.begin(), c.recall.end());
      mpre.insert(mpre.end(), c.precision.begin(), c.precision.end());
      mrec.push_back(1.0);
      mpre.push_back(0.0);
      for (std::size_t i = mpre.size() - 1; i > 0; --i) mpre[i - 1] = std::max(mpre[i - 1], mpre[i]);
      double ap = 0;
      for (std::size_t i = 1; i < mrec.size(); ++i) {
        if (mrec[i] != mrec[i - 1]) ap += (mrec[i] - mrec[i - 1]) * mpre[i];
      }
      return ap;
    }
    case Interpolation::kVoc11: {
      // Levels are t * 0.1 (so 0.30000000000000004, not 0.3), as in the
      // reference Python evaluator; recalls of exactly 3/10 etc. fall below.
      double ap = 0;
      for (int t = 0; t <= 10; ++t) {
        const double level = t * 0.1;
        double best = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (c.recall[i] >= level) best = std::max(best, c.precision[i]);
        }
        ap += best / 11.0;
      }
      return ap;
    }
  }
  return std::nullopt;
}

EvalConfig EvalConfig::Coco() {
  EvalConfig cfg;
  cfg.mode = MetricMode::kCoco;
  cfg.iou_thresholds = Linspace(0.5, 0.95, 10);
  cfg.interpolation = Interpolation::kCoco101;
  cfg.max_detections = 100;
  return cfg;
}

EvalConfig EvalConfig::Pascal(bool voc07_11_point) {
  EvalConfig cfg;
  cfg.mode = MetricMode::kPascal;
  cfg.iou_thresholds = {0.5};
  cfg.interpolation = voc07_11_point ? Interpolation::kVoc11 : Interpolation::kAllPoint;
  cfg.max_detections = 0;
  return cfg;
}

void EvalConfig::Validate() const {
  if (iou_thresholds.empty()) throw InvalidArgument("at least one IoU threshold is required");
  for (std::size_t i = 0; i < iou_thresholds.size(); ++i) {
    const double t = iou_thresholds[i];
    if (!(t > 0.0 && t <= 1.0)) throw InvalidArgument("IoU thresholds must lie in (0,1]");
    if (i > 0 && !(t > iou_thresholds[i - 1])) {
      throw InvalidArgument("IoU thresholds must be strictly increasing");
    }
  }
}

EvalResult Evaluate(const DetectionSet& dets, const GroundTruthSet& gts, const EvalConfig& cfg) {
  cfg.Validate();
  for (const auto& [image, list] : dets.images) {
    if (!gts.images.contains(image)) {
      throw InvalidArgument("detections reference unknown image id " + std::to_string(image));
    }
    for (const Detection& d : list) {
      if (!gts.categories.contains(d.category)) {
        throw InvalidArgument("detection references unknown category id " + std::to_string(d.category));
      }
      if (!std::isfinite(d.score)) throw InvalidArgument("detection score is not finite");
    }
  }
  std::size_t positives = 0;
  for (const auto& [image, list] : gts.images) {
    for (const GroundTruth& g : list) positives += !(g.ignore || g.crowd);
  }
  if (positives == 0) throw InvalidArgument("ground truth contains no non-ignored boxes");

  EvalResult result;
  result.categories.assign(gts.categories.begin(), gts.categories.end());
  result.iou_thresholds = cfg.iou_thresholds;
  const std::size_t nk = result.categories.size(), nt = cfg.iou_thresholds.size();
  result.ap.assign(nt, std::vector<std::optional<double>>(nk));

  const std::vector<Detection> no_dets;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nk); ++k) {
    const CategoryId cat = result.categories[k];
    // Per image: this category's ground truth and top-scored detections.
    std::vector<std::vector<GroundTruth>> image_gts;
    std::vector<std::vector<Detection>> image_dets;
    int n_positives = 0;
    for (const auto& [image, list] : gts.images) {
      std::vector<GroundTruth> g;
      for (const GroundTruth& gt : list) {
        if (gt.category != cat) continue;
        g.push_back(gt);
        n_positives += !(gt.ignore || gt.crowd);
      }
      const auto found = dets.images.find(image);
      const std::vector<Detection>& all = found == dets.images.end() ? no_dets : found->second;
      std::vector<Detection> own;
      for (const Detection& d : all) {
        if (d.category == cat) own.push_back(d);
      }
      std::vector<Detection> sorted;
      for (std::size_t i : ScoreOrder(own)) sorted.push_back(own[i]);
      if (cfg.max_detections > 0 && sorted.size() > static_cast<std::size_t>(cfg.max_detections)) {
        sorted.resize(cfg.max_detections);
      }
      image_gts.push_back(std::move(g));
      image_dets.push_back(std::move(sorted));
    }
    for (std::size_t t = 0; t < nt; ++t) {
      std::vector<MatchLabel> labels;
      std::vector<double> scores;
      for (std::size_t i = 0; i < image_gts.size(); ++i) {
        const std::vector<MatchLabel> l =
            MatchDetections(image_dets[i], image_gts[i], cfg.iou_thresholds[t]);
        labels.insert(labels.end(), l.begin(), l.end());
        for (const Detection& d : image_dets[i]) scores.push_back(d.score);
      }
      result.ap[t][k] = AveragePrecision(labels, scores, n_positives, cfg.interpolation);
    }
  }

  double sum = 0;
  int count = 0;
  for (const auto& row : result.ap) {
    for (const auto& ap : row) {
      if (ap) {
        sum += *ap;
        ++count;
      }
    }
  }
  result.p = count > 0 ? 100.0 * sum / count : 0.0;
  return result;
}

}  // namespace corruptbench::deteval
