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
#ifndef CORRUPTBENCH_DETEVAL_TYPES_H_
#define CORRUPTBENCH_DETEVAL_TYPES_H_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace corruptbench::deteval {

using ImageId = std::int64_t;
using CategoryId = std::int64_t;

// COCO convention: top-left corner plus extent, in pixels.
struct BoundingBox {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  double area() const { return w * h; }
};

struct GroundTruth {
  CategoryId category = 0;
  BoundingBox box;
  // Ignored ground truths are neither required (no false negative) nor
  // rewarded: a detection matched to one is dropped from the PR curve.
  bool ignore = false;
  // Crowd regions are ignored and may absorb any number of detections; their
  // overlap is intersection over detection area.
  bool crowd = false;
};

struct Detection {
  CategoryId category = 0;
  BoundingBox box;
  double score = 0;
};

struct GroundTruthSet {
  std::set<CategoryId> categories;
  // Every image of the dataset appears as a key, annotated or not.
  std::map<ImageId, std::vector<GroundTruth>> images;
};

struct DetectionSet {
  std::map<ImageId, std::vector<Detection>> images;
};

}  // namespace corruptbench::deteval

#endif  // CORRUPTBENCH_DETEVAL_TYPES_H_
