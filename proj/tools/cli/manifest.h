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
#ifndef CORRUPTBENCH_TOOLS_CLI_MANIFEST_H_
#define CORRUPTBENCH_TOOLS_CLI_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace corruptbench::cli {

std::string Sha256Hex(std::span<const std::uint8_t> bytes);
std::string Sha256File(const std::filesystem::path& path);

// Fields shared by every manifest: tool, version, severity-table hash,
// command and the argument vector that produced it.
nlohmann::json BaseManifest(const std::string& command, const std::vector<std::string>& args);

// {"path": ..., "sha256": ...}
nlohmann::json FileEntry(const std::filesystem::path& path);

void WriteJsonFile(const std::filesystem::path& path, const nlohmann::json& doc);
void WriteBytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void WriteText(const std::filesystem::path& path, const std::string& text);

// Sidecar location for single-file outputs: <file>.manifest.json
std::filesystem::path SidecarManifest(const std::filesystem::path& output);

}  // namespace corruptbench::cli

#endif  // CORRUPTBENCH_TOOLS_CLI_MANIFEST_H_
