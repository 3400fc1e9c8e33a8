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
#ifndef CORRUPTBENCH_TESTS_TEST_SUPPORT_H_
#define CORRUPTBENCH_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "corruptbench/imaging/image.h"

namespace corruptbench::testing {

inline std::filesystem::path SourcePath(const std::string& rel) {
  return std::filesystem::path(CORRUPTBENCH_SOURCE_DIR) / rel;
}

inline std::string ReadText(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline imaging::ImageBuffer RandomImage(int w, int h, int c, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  imaging::ImageBuffer img(w, h, c);
  for (auto& v : img.data()) v = static_cast<std::uint8_t>(gen() & 0xff);
  return img;
}

// Smooth gradient plus texture; closer to natural images than white noise.
inline imaging::ImageBuffer TestPattern(int w, int h, int c) {
  imaging::ImageBuffer img(w, h, c);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int k = 0; k < c; ++k) {
        const int v = (x * 255 / std::max(w - 1, 1) + y * 97 / std::max(h - 1, 1) + 40 * k +
                       ((x / 8 + y / 8) % 2) * 30) % 256;
        img.at(x, y, k) = static_cast<std::uint8_t>(v);
      }
    }
  }
  return img;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("corruptbench-" + tag + "-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace corruptbench::testing

#endif  // CORRUPTBENCH_TESTS_TEST_SUPPORT_H_
