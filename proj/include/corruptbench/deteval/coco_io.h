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
#ifndef CORRUPTBENCH_DETEVAL_COCO_IO_H_
#define CORRUPTBENCH_DETEVAL_COCO_IO_H_

#include <filesystem>
#include <string_view>

#include "corruptbench/deteval/types.h"

namespace corruptbench::deteval {

// COCO annotation file: {"images": [{"id"}], "annotations": [{"image_id",
// "category_id", "bbox": [x,y,w,h], "iscrowd"?, "ignore"?}], "categories":
// [{"id"}]}. Unknown fields are ignored. Errors name the source and the first
// offending field, e.g. "gt.json: annotations[3].bbox: expected 4 numbers".
// Malformed content throws InvalidArgument, unreadable files IoError.
GroundTruthSet ParseGroundTruth(std::string_view json_text, std::string_view source = "<memory>");
GroundTruthSet LoadGroundTruth(const std::filesystem::path& path);

// COCO results file: [{"image_id", "category_id", "bbox", "score"}]. Image
// and category ids must exist in `gts`; scores must be finite.
DetectionSet ParseDetections(std::string_view json_text, const GroundTruthSet& gts,
                             std::string_view source = "<memory>");
DetectionSet LoadDetections(const std::filesystem::path& path, const GroundTruthSet& gts);

}  // namespace corruptbench::deteval

#endif  // CORRUPTBENCH_DETEVAL_COCO_IO_H_
