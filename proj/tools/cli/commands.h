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
#ifndef CORRUPTBENCH_TOOLS_CLI_COMMANDS_H_
#define CORRUPTBENCH_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.h"

namespace corruptbench::cli {

struct CommonOptions {
  std::optional<std::filesystem::path> config_path;
  bool json = false;
  std::vector<std::string> args;  // full argument vector, for manifests

  ConfigFile LoadConfigOrEmpty() const;
};

struct CorruptOptions {
  std::filesystem::path in_dir;
  std::filesystem::path out_dir;
  std::vector<std::string> corruptions;
  std::vector<int> severities;
  bool validation = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
  int jpeg_quality = 95;
};

struct EvaluateOptions {
  std::filesystem::path gt;
  std::filesystem::path dets;
  std::optional<std::string> mode;
  bool voc07 = false;
};

struct BenchRunOptions {
  std::filesystem::path gt;
  std::filesystem::path dets_dir;
  std::optional<std::string> mode;
  bool voc07 = false;
  std::optional<std::filesystem::path> out;
  bool allow_partial = false;
  std::string model = "model";
  std::string backbone = "-";
  std::optional<std::string> dataset;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
};

struct BenchReportOptions {
  std::vector<std::filesystem::path> inputs;
  std::string format = "md";
  std::optional<std::filesystem::path> out;
};

struct AnalyzeImpactOptions {
  std::filesystem::path corpus;
  std::filesystem::path grid;
  std::filesystem::path out;
  std::vector<std::string> corruptions;
  std::optional<std::uint64_t> seed;
  std::optional<int> jobs;
};

struct StylizeOptions {
  std::filesystem::path content;
  std::filesystem::path style;
  double alpha = 1.0;
  std::filesystem::path out;
};

// Each returns an exit code; library exceptions propagate to the caller.
int CmdCorrupt(const CommonOptions& common, const CorruptOptions& opt, std::ostream& out, std::ostream& err);
int CmdEvaluate(const CommonOptions& common, const EvaluateOptions& opt, std::ostream& out, std::ostream& err);
int CmdBenchRun(const CommonOptions& common, const BenchRunOptions& opt, std::ostream& out, std::ostream& err);
int CmdBenchReport(const CommonOptions& common, const BenchReportOptions& opt, std::ostream& out,
                   std::ostream& err);
int CmdAnalyzeImpact(const CommonOptions& common, const AnalyzeImpactOptions& opt, std::ostream& out,
                     std::ostream& err);
int CmdStylize(const CommonOptions& common, const StylizeOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace corruptbench::cli

#endif  // CORRUPTBENCH_TOOLS_CLI_COMMANDS_H_
