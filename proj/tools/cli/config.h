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
#ifndef CORRUPTBENCH_TOOLS_CLI_CONFIG_H_
#define CORRUPTBENCH_TOOLS_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace corruptbench::cli {

// key = value lines; '#' starts a comment; values may be double-quoted.
// Recognized keys: seed, jobs, mode. Anything else is an error.
struct ConfigFile {
  std::map<std::string, std::string> values;
  std::string source;

  std::optional<std::string> Get(const std::string& key) const;
};

ConfigFile ParseConfig(std::string_view text, std::string_view source);
ConfigFile LoadConfig(const std::filesystem::path& path);

std::uint64_t ParseSeed(std::string_view text, std::string_view what);
int ParseJobs(std::string_view text, std::string_view what);

struct SeedChoice {
  std::uint64_t value = 0;
  std::string origin;  // "flag", "config", "env" or "default"
  bool explicit_choice() const { return origin != "default"; }
};

// Flags beat the config file, which beats CORRUPTBENCH_SEED.
SeedChoice ResolveSeed(const std::optional<std::uint64_t>& flag, const ConfigFile& config,
                       const char* env_value);
int ResolveJobs(const std::optional<int>& flag, const ConfigFile& config);
std::string ResolveMode(const std::optional<std::string>& flag, const ConfigFile& config);

}  // namespace corruptbench::cli

#endif  // CORRUPTBENCH_TOOLS_CLI_CONFIG_H_
