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
#include "cli/config.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "corruptbench/common/error.h"

namespace corruptbench::cli {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> ConfigFile::Get(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

ConfigFile ParseConfig(std::string_view text, std::string_view source) {
  ConfigFile cfg;
  cfg.source = source;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument(where + ": expected key = value");
    const std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key != "seed" && key != "jobs" && key != "mode") {
      throw InvalidArgument(where + ": unknown key '" + key + "' (expected seed, jobs or mode)");
    }
    if (value.empty()) throw InvalidArgument(where + ": empty value for '" + key + "'");
    cfg.values[key] = std::string(value);
  }
  if (const auto seed = cfg.Get("seed")) ParseSeed(*seed, std::string(source) + ": seed");
  if (const auto jobs = cfg.Get("jobs")) ParseJobs(*jobs, std::string(source) + ": jobs");
  if (const auto mode = cfg.Get("mode"); mode && *mode != "coco" && *mode != "pascal") {
    throw InvalidArgument(std::string(source) + ": mode: expected coco or pascal");
  }
  return cfg;
}

ConfigFile LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str(), path.string());
}

std::uint64_t ParseSeed(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument(std::string(what) + ": expected an unsigned 64-bit integer, got '" + std::string(text) + "'");
  }
  return v;
}

int ParseJobs(std::string_view text, std::string_view what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v < 1) {
    throw InvalidArgument(std::string(what) + ": expected a positive integer, got '" + std::string(text) + "'");
  }
  return v;
}

SeedChoice ResolveSeed(const std::optional<std::uint64_t>& flag, const ConfigFile& config,
                       const char* env_value) {
  if (flag) return {*flag, "flag"};
  if (const auto v = config.Get("seed")) return {ParseSeed(*v, config.source + ": seed"), "config"};
  if (env_value && *env_value) return {ParseSeed(env_value, "CORRUPTBENCH_SEED"), "env"};
  return {0, "default"};
}

int ResolveJobs(const std::optional<int>& flag, const ConfigFile& config) {
  if (flag) {
    if (*flag < 1) throw InvalidArgument("--jobs must be positive");
    return *flag;
  }
  if (const auto v = config.Get("jobs")) return ParseJobs(*v, config.source + ": jobs");
  return omp_get_max_threads();
}

std::string ResolveMode(const std::optional<std::string>& flag, const ConfigFile& config) {
  if (flag) return *flag;
  if (const auto v = config.Get("mode")) return *v;
  return "coco";
}

}  // namespace corruptbench::cli
