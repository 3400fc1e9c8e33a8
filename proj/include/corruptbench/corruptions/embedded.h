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
#ifndef CORRUPTBENCH_CORRUPTIONS_EMBEDDED_H_
#define CORRUPTBENCH_CORRUPTIONS_EMBEDDED_H_

#include <cstddef>

namespace corruptbench::corruptions::assets {

struct EmbeddedFile {
  const char* name;
  const unsigned char* data;
  std::size_t size;
};

// assets/frost/*, compiled in at build time.
extern const EmbeddedFile kFrostTextures[];
extern const std::size_t kNumFrostTextures;

}  // namespace corruptbench::corruptions::assets

#endif  // CORRUPTBENCH_CORRUPTIONS_EMBEDDED_H_
