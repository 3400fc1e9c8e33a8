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
#include "corruptbench/deteval/matching.h"

#include <algorithm>
#include <numeric>

namespace corruptbench::deteval {
namespace {

double Intersection(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  const double ih = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  return iw > 0 && ih > 0 ? iw * ih : 0.0;
}

}  // namespace

double Iou(const BoundingBox& a, const BoundingBox& b) {
  const double inter = Intersection(a, b);
  const double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

double CrowdOverlap(const BoundingBox& det, const BoundingBox& crowd) {
  const double area = det.area();
  return area > 0 ? Intersection(det, crowd) / area : 0.0;
}

std::vector<std::size_t> ScoreOrder(std::span<const Detection> dets) {
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dets[a].score > dets[b].score; });
  return order;
}

std::vector<MatchLabel> MatchDetections(std::span<const Detection> sorted_dets,
                                        std::span<const GroundTruth> gts, double iou_threshold) {
  std::vector<MatchLabel> labels(sorted_dets.size(), MatchLabel::kFalsePositive);
  std::vector<bool> taken(gts.size(), false);
  for (std::size_t d = 0; d < sorted_dets.size(); ++d) {
    const Detection& det = sorted_dets[d];
    int best = -1;
    double best_iou = iou_threshold;
    for (std::size_t g = 0; g < gts.size(); ++g) {
      const GroundTruth& gt = gts[g];
      if (gt.category != det.category || gt.ignore || gt.crowd || taken[g]) continue;
      const double iou = Iou(det.box, gt.box);
      if (iou >= best_iou && (best < 0 || iou > best_iou)) {
        best = static_cast<int>(g);
        best_iou = iou;
      }
    }
    if (best >= 0) {
      taken[best] = true;
      labels[d] = MatchLabel::kTruePositive;
      continue;
    }
    int region = -1;
    double region_overlap = iou_threshold;
    for (std::size_t g = 0; g < gts.size(); ++g) {
      const GroundTruth& gt = gts[g];
      if (gt.category != det.category || !(gt.ignore || gt.crowd)) continue;
      if (!gt.crowd && taken[g]) continue;
      const double overlap = gt.crowd ? CrowdOverlap(det.box, gt.box) : Iou(det.box, gt.box);
      if (overlap >= region_overlap && (region < 0 || overlap > region_overlap)) {
        region = static_cast<int>(g);
        region_overlap = overlap;
      }
    }
    if (region >= 0) {
      if (!gts[region].crowd) taken[region] = true;
      labels[d] = MatchLabel::kIgnored;
    }
  }
  return labels;
}

}  // namespace corruptbench::deteval
