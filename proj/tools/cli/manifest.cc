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
#include "cli/manifest.h"

#include <fstream>
#include <iterator>
#include <memory>

#include <openssl/evp.h>

#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/corruptions.h"
#include "corruptbench/version.h"

namespace corruptbench::cli {

namespace fs = std::filesystem;

std::string Sha256Hex(std::span<const std::uint8_t> bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw IoError("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string Sha256File(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return Sha256Hex(bytes);
}

nlohmann::json BaseManifest(const std::string& command, const std::vector<std::string>& args) {
  return {{"tool", "corruptbench"},
          {"tool_version", kVersion},
          {"severity_table_hash", corruptions::SeverityTableHash()},
          {"command", command},
          {"args", args}};
}

nlohmann::json FileEntry(const fs::path& path) {
  return {{"path", path.generic_string()}, {"sha256", Sha256File(path)}};
}

void WriteBytes(const fs::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write to " + path.string());
}

void WriteText(const fs::path& path, const std::string& text) {
  WriteBytes(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void WriteJsonFile(const fs::path& path, const nlohmann::json& doc) { WriteText(path, doc.dump(2) + "\n"); }

fs::path SidecarManifest(const fs::path& output) {
  fs::path p = output;
  p += ".manifest.json";
  return p;
}

}  // namespace corruptbench::cli
