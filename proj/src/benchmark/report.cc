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
#include "corruptbench/benchmark/report.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corruptbench/common/error.h"
#include "corruptbench/deteval/coco_io.h"

namespace corruptbench::benchmark {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kFormatTag = "corruptbench-report/1";

std::string OneDecimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", RoundOneDecimal(v));
  return buf;
}

json RowsToJson(const std::map<std::string, SeverityRow>& rows) {
  json out = json::object();
  for (const auto& [name, row] : rows) {
    json arr = json::array();
    for (const auto& v : row) arr.push_back(v ? json(*v) : json(nullptr));
    out[name] = arr;
  }
  return out;
}

json SummariesToJson(const std::vector<CorruptionSummary>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"corruption", r.corruption}, {"group", r.group}, {"mean_p", r.mean_p}});
  return out;
}

template <typename T>
T Field(const json& obj, const char* key, std::string_view source) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InvalidArgument(std::string(source) + ": " + key + ": missing");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string(source) + ": " + key + ": wrong type");
  }
}

std::vector<CorruptionSummary> SummariesFromJson(const json& arr, std::string_view source) {
  std::vector<CorruptionSummary> rows;
  for (const json& r : arr) {
    rows.push_back({Field<std::string>(r, "corruption", source), Field<std::string>(r, "group", source),
                    Field<double>(r, "mean_p", source)});
  }
  return rows;
}

std::vector<const BenchmarkReport*> Ranked(std::span<const BenchmarkReport> reports) {
  std::vector<const BenchmarkReport*> ranked;
  for (const auto& r : reports) ranked.push_back(&r);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const BenchmarkReport* a, const BenchmarkReport* b) { return a->mpc > b->mpc; });
  return ranked;
}

std::string MetricSuffix(std::span<const BenchmarkReport> reports) {
  if (reports.empty()) return "";
  const std::string& mode = reports.front().metadata.metric_mode;
  for (const auto& r : reports) {
    if (r.metadata.metric_mode != mode) return "";
  }
  if (mode == "pascal") return " [AP50]";
  if (mode == "coco") return " [AP]";
  return "";
}

}  // namespace

BenchmarkReport MakeReport(const PerformanceGrid& grid, ReportMetadata metadata, bool allow_partial) {
  if (!grid.p_clean()) throw InvalidArgument("performance grid has no clean result");
  BenchmarkReport report;
  report.metadata = std::move(metadata);
  report.grid = grid;
  report.p_clean = *grid.p_clean();
  report.missing = grid.MissingCells();
  report.partial = !report.missing.empty();
  report.mpc = Mpc(grid, allow_partial);
  report.rpc = Rpc(report.mpc, report.p_clean);
  for (const auto& info : corruptions::BenchmarkCorruptions()) {
    const auto it = grid.benchmark_cells().find(std::string(info.name));
    if (it == grid.benchmark_cells().end()) continue;
    if (const auto mean = CorruptionMean(it->second)) {
      report.per_corruption.push_back(
          {std::string(info.name), std::string(corruptions::GroupName(info.group)), *mean});
    }
  }
  for (const auto& info : corruptions::ValidationCorruptions()) {
    const auto it = grid.validation_cells().find(std::string(info.name));
    if (it == grid.validation_cells().end()) continue;
    if (const auto mean = CorruptionMean(it->second)) {
      report.validation.push_back(
          {std::string(info.name), std::string(corruptions::GroupName(info.group)), *mean});
    }
  }
  return report;
}

PerformanceGrid RunGrid(const deteval::GroundTruthSet& gts, const fs::path& dets_dir,
                        const deteval::EvalConfig& cfg, std::vector<fs::path>* missing_files) {
  struct Condition {
    std::string corruption;  // empty for clean
    int severity;
    fs::path file;
    double p = 0;
  };
  std::vector<Condition> conditions;
  const fs::path clean = dets_dir / "clean.json";
  if (!fs::exists(clean)) throw InvalidArgument("missing clean detections: " + clean.string());
  conditions.push_back({"", 0, clean});
  std::vector<fs::path> absent;
  for (const auto& info : corruptions::AllCorruptions()) {
    for (int s = 1; s <= corruptions::kNumSeverities; ++s) {
      const fs::path file = dets_dir / std::string(info.name) / (std::to_string(s) + ".json");
      if (fs::exists(file)) {
        conditions.push_back({std::string(info.name), s, file});
      } else if (info.benchmark) {
        absent.push_back(file);
      }
    }
  }
  if (missing_files) *missing_files = absent;

  // Conditions are independent; errors are collected and rethrown after
  // the loop so none escapes the parallel region.
  std::vector<std::exception_ptr> errors(conditions.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(conditions.size()); ++i) {
    try {
      const deteval::DetectionSet dets = deteval::LoadDetections(conditions[i].file, gts);
      conditions[i].p = deteval::Evaluate(dets, gts, cfg).p;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  PerformanceGrid grid;
  grid.set_p_clean(conditions.front().p);
  for (std::size_t i = 1; i < conditions.size(); ++i) {
    grid.Set(conditions[i].corruption, conditions[i].severity, conditions[i].p);
  }
  return grid;
}

std::string ToJson(const BenchmarkReport& r) {
  json j;
  j["format"] = kFormatTag;
  json meta = {{"model", r.metadata.model},
               {"backbone", r.metadata.backbone},
               {"dataset", r.metadata.dataset},
               {"metric_mode", r.metadata.metric_mode},
               {"interpolation", r.metadata.interpolation},
               {"tool_version", r.metadata.tool_version},
               {"severity_table_hash", r.metadata.severity_table_hash}};
  meta["seed"] = r.metadata.seed ? json(*r.metadata.seed) : json(nullptr);
  j["metadata"] = meta;
  j["p_clean"] = r.p_clean;
  j["mpc"] = r.mpc;
  j["rpc"] = r.rpc;
  j["rounded"] = {{"p_clean", RoundOneDecimal(r.p_clean)},
                  {"mpc", RoundOneDecimal(r.mpc)},
                  {"rpc", RoundOneDecimal(r.rpc)}};
  j["partial"] = r.partial;
  json missing = json::array();
  for (const Cell& c : r.missing) missing.push_back({{"corruption", c.corruption}, {"severity", c.severity}});
  j["missing"] = missing;
  j["per_corruption"] = SummariesToJson(r.per_corruption);
  j["validation"] = SummariesToJson(r.validation);
  json grid;
  grid["p_clean"] = r.grid.p_clean() ? json(*r.grid.p_clean()) : json(nullptr);
  grid["benchmark"] = RowsToJson(r.grid.benchmark_cells());
  grid["validation"] = RowsToJson(r.grid.validation_cells());
  j["grid"] = grid;
  return j.dump(2) + "\n";
}

BenchmarkReport ReportFromJson(std::string_view text, std::string_view source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string(source) + ": invalid JSON: " + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kFormatTag) {
    throw InvalidArgument(std::string(source) + ": format: expected \"" + kFormatTag + "\"");
  }
  BenchmarkReport r;
  const json& meta = j.at("metadata");
  r.metadata.model = Field<std::string>(meta, "model", source);
  r.metadata.backbone = Field<std::string>(meta, "backbone", source);
  r.metadata.dataset = Field<std::string>(meta, "dataset", source);
  r.metadata.metric_mode = Field<std::string>(meta, "metric_mode", source);
  r.metadata.interpolation = Field<std::string>(meta, "interpolation", source);
  r.metadata.tool_version = Field<std::string>(meta, "tool_version", source);
  r.metadata.severity_table_hash = Field<std::string>(meta, "severity_table_hash", source);
  if (meta.contains("seed") && !meta["seed"].is_null()) r.metadata.seed = meta["seed"].get<std::uint64_t>();
  r.p_clean = Field<double>(j, "p_clean", source);
  r.mpc = Field<double>(j, "mpc", source);
  r.rpc = Field<double>(j, "rpc", source);
  r.partial = Field<bool>(j, "partial", source);
  for (const json& c : j.at("missing")) {
    r.missing.push_back({Field<std::string>(c, "corruption", source), Field<int>(c, "severity", source)});
  }
  r.per_corruption = SummariesFromJson(j.at("per_corruption"), source);
  r.validation = SummariesFromJson(j.at("validation"), source);
  const json& grid = j.at("grid");
  if (!grid["p_clean"].is_null()) r.grid.set_p_clean(grid["p_clean"].get<double>());
  for (const char* part : {"benchmark", "validation"}) {
    for (const auto& [name, row] : grid.at(part).items()) {
      if (!row.is_array() || row.size() != corruptions::kNumSeverities) {
        throw InvalidArgument(std::string(source) + ": grid." + part + "." + name + ": expected 5 entries");
      }
      for (int s = 1; s <= corruptions::kNumSeverities; ++s) {
        if (!row[s - 1].is_null()) r.grid.Set(name, s, row[s - 1].get<double>());
      }
    }
  }
  return r;
}

void WriteReport(const fs::path& path, const BenchmarkReport& report) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << ToJson(report);
  if (!out) throw IoError("short write to " + path.string());
}

BenchmarkReport ReadReport(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ReportFromJson(ss.str(), path.string());
}

std::string ToMarkdown(std::span<const BenchmarkReport> reports) {
  const std::string unit = MetricSuffix(reports);
  std::string out = "| model | backbone | P" + unit + " | mPC" + unit + " | rPC [%] |\n";
  out += "|---|---|---|---|---|\n";
  for (const BenchmarkReport* r : Ranked(reports)) {
    out += "| " + r->metadata.model + " | " + r->metadata.backbone + " | " + OneDecimal(r->p_clean) +
           " | " + OneDecimal(r->mpc) + " | " + OneDecimal(r->rpc) + " |\n";
  }
  return out;
}

std::string ToCsv(std::span<const BenchmarkReport> reports) {
  std::string out = "model,backbone,dataset,metric_mode,p_clean,mpc,rpc\n";
  for (const BenchmarkReport* r : Ranked(reports)) {
    out += r->metadata.model + "," + r->metadata.backbone + "," + r->metadata.dataset + "," +
           r->metadata.metric_mode + "," + OneDecimal(r->p_clean) + "," + OneDecimal(r->mpc) + "," +
           OneDecimal(r->rpc) + "\n";
  }
  return out;
}

}  // namespace corruptbench::benchmark
