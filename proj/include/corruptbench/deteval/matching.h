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
#ifndef CORRUPTBENCH_DETEVAL_MATCHING_H_
#define CORRUPTBENCH_DETEVAL_MATCHING_H_

#include <span>
#include <vector>

#include "corruptbench/deteval/types.h"

namespace corruptbench::deteval {

// Intersection over union; 0 when the union is empty.
double Iou(const BoundingBox& a, const BoundingBox& b);

// Overlap used against crowd regions: intersection over the detection's area.
double CrowdOverlap(const BoundingBox& det, const BoundingBox& crowd);

enum class MatchLabel { kTruePositive, kFalsePositive, kIgnored };

// Indices of `dets` ordered by descending score, ties in input order.
std::vector<std::size_t> ScoreOrder(std::span<const Detection> dets);

// Greedy matching of score-sorted detections against one image's ground
// truth. Each detection takes the unmatched, same-category, non-ignored
// ground truth with the highest IoU >= threshold (lowest index on ties).
// Failing that, the detection is labelled kIgnored if some ignored or crowd
// region overlaps it at >= threshold (IoU for plain ignore boxes, CrowdOverlap
// for crowds); the best such region is consumed unless it is a crowd.
// Otherwise it is a false positive.
std::vector<MatchLabel> MatchDetections(std::span<const Detection> sorted_dets,
                                        std::span<const GroundTruth> gts, double iou_threshold);

}  // namespace corruptbench::deteval

#endif  // CORRUPTBENCH_DETEVAL_MATCHING_H_
