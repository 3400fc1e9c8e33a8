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
#include "corruptbench/deteval/coco_io.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "corruptbench/common/error.h"

namespace corruptbench::deteval {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(std::string_view source, const std::string& field, const std::string& msg) {
  throw InvalidArgument(std::string(source) + ": " + field + ": " + msg);
}

json ParseJson(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string(source) + ": invalid JSON: " + e.what());
  }
}

std::int64_t GetId(const json& obj, const char* key, std::string_view source, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) Fail(source, where + "." + key, "missing");
  if (!it->is_number_integer()) Fail(source, where + "." + key, "expected an integer");
  return it->get<std::int64_t>();
}

BoundingBox GetBox(const json& obj, std::string_view source, const std::string& where) {
  const auto it = obj.find("bbox");
  const std::string field = where + ".bbox";
  if (it == obj.end()) Fail(source, field, "missing");
  if (!it->is_array() || it->size() != 4) Fail(source, field, "expected 4 numbers");
  double v[4];
  for (int i = 0; i < 4; ++i) {
    if (!(*it)[i].is_number()) Fail(source, field, "expected 4 numbers");
    v[i] = (*it)[i].get<double>();
    if (!std::isfinite(v[i])) Fail(source, field, "non-finite coordinate");
  }
  if (v[2] < 0 || v[3] < 0) Fail(source, field, "negative width or height");
  return {v[0], v[1], v[2], v[3]};
}

bool GetFlag(const json& obj, const char* key, std::string_view source, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return false;
  if (it->is_boolean()) return it->get<bool>();
  if (it->is_number_integer()) return it->get<std::int64_t>() != 0;
  Fail(source, where + "." + key, "expected 0/1 or a boolean");
}

const json& GetArray(const json& root, const char* key, std::string_view source) {
  const auto it = root.find(key);
  if (it == root.end()) Fail(source, key, "missing");
  if (!it->is_array()) Fail(source, key, "expected an array");
  return *it;
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GroundTruthSet ParseGroundTruth(std::string_view json_text, std::string_view source) {
  const json root = ParseJson(json_text, source);
  if (!root.is_object()) Fail(source, "<root>", "expected an object");
  GroundTruthSet gts;

  const json& images = GetArray(root, "images", source);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string where = "images[" + std::to_string(i) + "]";
    const ImageId id = GetId(images[i], "id", source, where);
    if (!gts.images.emplace(id, std::vector<GroundTruth>{}).second) {
      Fail(source, where + ".id", "duplicate image id " + std::to_string(id));
    }
  }
  const json& categories = GetArray(root, "categories", source);
  for (std::size_t i = 0; i < categories.size(); ++i) {
    gts.categories.insert(GetId(categories[i], "id", source, "categories[" + std::to_string(i) + "]"));
  }
  const json& anns = GetArray(root, "annotations", source);
  for (std::size_t i = 0; i < anns.size(); ++i) {
    const std::string where = "annotations[" + std::to_string(i) + "]";
    const json& a = anns[i];
    if (!a.is_object()) Fail(source, where, "expected an object");
    const ImageId image = GetId(a, "image_id", source, where);
    const auto img = gts.images.find(image);
    if (img == gts.images.end()) Fail(source, where + ".image_id", "unknown image id " + std::to_string(image));
    GroundTruth gt;
    gt.category = GetId(a, "category_id", source, where);
    if (!gts.categories.contains(gt.category)) {
      Fail(source, where + ".category_id", "undeclared category " + std::to_string(gt.category));
    }
    gt.box = GetBox(a, source, where);
    gt.crowd = GetFlag(a, "iscrowd", source, where);
    gt.ignore = GetFlag(a, "ignore", source, where) || gt.crowd;
    img->second.push_back(gt);
  }
  return gts;
}

GroundTruthSet LoadGroundTruth(const std::filesystem::path& path) {
  return ParseGroundTruth(ReadText(path), path.string());
}

DetectionSet ParseDetections(std::string_view json_text, const GroundTruthSet& gts,
                             std::string_view source) {
  const json root = ParseJson(json_text, source);
  if (!root.is_array()) Fail(source, "<root>", "expected an array of detections");
  DetectionSet dets;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string where = "[" + std::to_string(i) + "]";
    const json& d = root[i];
    if (!d.is_object()) Fail(source, where, "expected an object");
    const ImageId image = GetId(d, "image_id", source, where);
    if (!gts.images.contains(image)) Fail(source, where + ".image_id", "unknown image id " + std::to_string(image));
    Detection det;
    det.category = GetId(d, "category_id", source, where);
    if (!gts.categories.contains(det.category)) {
      Fail(source, where + ".category_id", "unknown category " + std::to_string(det.category));
    }
    det.box = GetBox(d, source, where);
    const auto score = d.find("score");
    if (score == d.end()) Fail(source, where + ".score", "missing");
    if (!score->is_number()) Fail(source, where + ".score", "expected a number");
    det.score = score->get<double>();
    if (!std::isfinite(det.score)) Fail(source, where + ".score", "not finite");
    dets.images[image].push_back(det);
  }
  return dets;
}

DetectionSet LoadDetections(const std::filesystem::path& path, const GroundTruthSet& gts) {
  return ParseDetections(ReadText(path), gts, path.string());
}

}  // namespace corruptbench::deteval
