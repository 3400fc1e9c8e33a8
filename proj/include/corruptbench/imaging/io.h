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
#ifndef CORRUPTBENCH_IMAGING_IO_H_
#define CORRUPTBENCH_IMAGING_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "corruptbench/imaging/image.h"

namespace corruptbench::imaging {

// PNG and JPEG, 8-bit, gray or RGB. Alpha channels are dropped on read;
// 16-bit PNGs are reduced to 8 bits. Format is sniffed from the content.
// Throws IoError.
ImageBuffer ReadImage(const std::filesystem::path& path);
ImageBuffer DecodeImage(std::span<const std::uint8_t> bytes);

// Format chosen from the extension (.png, .jpg, .jpeg; case-insensitive).
void WriteImage(const std::filesystem::path& path, const ImageBuffer& img,
                int jpeg_quality = 95);

std::vector<std::uint8_t> EncodePng(const ImageBuffer& img);
std::vector<std::uint8_t> EncodeJpeg(const ImageBuffer& img, int quality);

bool IsSupportedImagePath(const std::filesystem::path& path);

}  // namespace corruptbench::imaging

#endif  // CORRUPTBENCH_IMAGING_IO_H_
