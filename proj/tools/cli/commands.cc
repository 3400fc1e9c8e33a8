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
#include "cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <set>

#include <omp.h>

#include <json.hpp>

#include "cli/manifest.h"
#include "corruptbench/analysis/impact.h"
#include "corruptbench/analysis/metrics.h"
#include "corruptbench/benchmark/report.h"
#include "corruptbench/common/error.h"
#include "corruptbench/corruptions/corruptions.h"
#include "corruptbench/deteval/coco_io.h"
#include "corruptbench/deteval/evaluate.h"
#include "corruptbench/imaging/io.h"
#include "corruptbench/stylize/adain.h"
#include "corruptbench/version.h"

namespace corruptbench::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using corruptions::Corruption;

std::string Fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", benchmark::RoundOneDecimal(v));
  return buf;
}

bool IsJpegPath(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".jpg" || ext == ".jpeg";
}

// Parent directories must exist before the parallel writers run.
void EnsureParent(const fs::path& file) {
  if (file.has_parent_path()) fs::create_directories(file.parent_path());
}

std::vector<Corruption> SelectCorruptions(const std::vector<std::string>& names, bool validation) {
  std::vector<Corruption> out;
  if (names.empty()) {
    const auto set = validation ? corruptions::ValidationCorruptions() : corruptions::BenchmarkCorruptions();
    for (const auto& info : set) out.push_back(info.id);
    return out;
  }
  std::set<Corruption> chosen;
  for (const auto& n : names) {
    const auto c = corruptions::ParseCorruption(n);
    if (!c) throw InvalidArgument("unknown corruption '" + n + "'");
    chosen.insert(*c);
  }
  // Catalog order, independent of flag order.
  for (const auto& info : corruptions::AllCorruptions()) {
    if (chosen.count(info.id)) out.push_back(info.id);
  }
  return out;
}

deteval::EvalConfig MakeEvalConfig(const std::string& mode, bool voc07) {
  if (mode == "coco") {
    if (voc07) throw InvalidArgument("--voc07 applies to --mode pascal only");
    return deteval::EvalConfig::Coco();
  }
  if (mode == "pascal") return deteval::EvalConfig::Pascal(voc07);
  throw InvalidArgument("--mode must be coco or pascal, got '" + mode + "'");
}

std::string MetricLabel(const std::string& mode) { return mode == "pascal" ? "AP50" : "AP"; }

json FileList(const std::vector<fs::path>& files) {
  json arr = json::array();
  for (const auto& f : files) arr.push_back(FileEntry(f));
  return arr;
}

}  // namespace

ConfigFile CommonOptions::LoadConfigOrEmpty() const {
  if (config_path) return LoadConfig(*config_path);
  return ConfigFile{};
}

int CmdCorrupt(const CommonOptions& common, const CorruptOptions& opt, std::ostream& out, std::ostream& err) {
  const ConfigFile config = common.LoadConfigOrEmpty();
  const SeedChoice seed = ResolveSeed(opt.seed, config, std::getenv("CORRUPTBENCH_SEED"));
  const int jobs = ResolveJobs(opt.jobs, config);
  if (opt.validation && !opt.corruptions.empty()) {
    throw InvalidArgument("--validation and --corruption are mutually exclusive");
  }
  const std::vector<Corruption> selected = SelectCorruptions(opt.corruptions, opt.validation);
  std::vector<int> severities = opt.severities;
  if (severities.empty()) severities = {1, 2, 3, 4, 5};
  std::sort(severities.begin(), severities.end());
  severities.erase(std::unique(severities.begin(), severities.end()), severities.end());
  for (int s : severities) {
    if (s < 1 || s > corruptions::kNumSeverities) throw InvalidArgument("--severity must be in 1..5");
  }
  if (opt.jpeg_quality < 1 || opt.jpeg_quality > 100) throw InvalidArgument("--jpeg-quality must be in 1..100");
  if (!fs::is_directory(opt.in_dir)) throw IoError("input is not a directory: " + opt.in_dir.string());

  // Inputs in relative-path order. An output tree nested inside the input
  // tree is skipped so reruns do not feed on their own results.
  const fs::path out_abs = fs::weakly_canonical(fs::absolute(opt.out_dir));
  std::vector<std::string> rels;
  for (auto it = fs::recursive_directory_iterator(opt.in_dir); it != fs::recursive_directory_iterator(); ++it) {
    if (it->is_directory() && fs::weakly_canonical(it->path()) == out_abs) {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file() && imaging::IsSupportedImagePath(it->path())) {
      rels.push_back(fs::relative(it->path(), opt.in_dir).generic_string());
    }
  }
  std::sort(rels.begin(), rels.end());
  if (rels.empty()) throw InvalidArgument("no PNG or JPEG images under " + opt.in_dir.string());

  omp_set_num_threads(jobs);
  std::vector<imaging::ImageBuffer> images(rels.size());
  std::vector<std::string> load_error(rels.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rels.size()); ++i) {
    try {
      images[i] = imaging::ReadImage(opt.in_dir / rels[i]);
    } catch (const std::exception& e) {
      load_error[i] = e.what();
    }
  }

  struct Task {
    std::size_t image;
    Corruption corruption;
    int severity;
    std::string output;  // relative to out_dir
    std::string sha256;
    std::string error;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!load_error[i].empty()) continue;
    for (const Corruption c : selected) {
      for (const int s : severities) {
        const std::string rel =
            std::string(corruptions::Name(c)) + "/" + std::to_string(s) + "/" + rels[i];
        tasks.push_back({i, c, s, rel, {}, {}});
      }
    }
  }
  fs::create_directories(opt.out_dir);
  for (const auto& t : tasks) EnsureParent(opt.out_dir / t.output);

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(tasks.size()); ++k) {
    Task& t = tasks[k];
    try {
      const auto img = corruptions::Corrupt(images[t.image], t.corruption, t.severity, seed.value, rels[t.image]);
      const auto bytes = IsJpegPath(t.output) ? imaging::EncodeJpeg(img, opt.jpeg_quality) : imaging::EncodePng(img);
      WriteBytes(opt.out_dir / t.output, bytes);
      t.sha256 = Sha256Hex(bytes);
    } catch (const std::exception& e) {
      t.error = e.what();
    }
  }

  json manifest = BaseManifest("corrupt", common.args);
  manifest["seed"] = seed.value;
  manifest["seed_origin"] = seed.origin;
  manifest["input"] = opt.in_dir.generic_string();
  manifest["output"] = opt.out_dir.generic_string();
  manifest["jpeg_quality"] = opt.jpeg_quality;
  json names = json::array();
  for (const Corruption c : selected) names.push_back(corruptions::Name(c));
  manifest["corruptions"] = names;
  manifest["severities"] = severities;
  json records = json::array();
  json errors = json::array();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!load_error[i].empty()) errors.push_back({{"input", rels[i]}, {"message", load_error[i]}});
  }
  std::size_t written = 0;
  for (const auto& t : tasks) {
    if (!t.error.empty()) {
      errors.push_back({{"input", rels[t.image]},
                        {"corruption", corruptions::Name(t.corruption)},
                        {"severity", t.severity},
                        {"message", t.error}});
      continue;
    }
    ++written;
    records.push_back({{"input", rels[t.image]},
                       {"corruption", corruptions::Name(t.corruption)},
                       {"severity", t.severity},
                       {"output", t.output},
                       {"sha256", t.sha256}});
  }
  manifest["records"] = records;
  manifest["errors"] = errors;
  const fs::path manifest_path = opt.out_dir / "manifest.json";
  WriteJsonFile(manifest_path, manifest);

  for (const auto& e : errors) err << "warning: " << e["input"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
  const bool all_failed = written == 0;
  if (common.json) {
    out << json{{"ok", !all_failed},
                {"written", written},
                {"errors", errors.size()},
                {"seed", seed.value},
                {"manifest", manifest_path.generic_string()}}
               .dump()
        << "\n";
  } else {
    out << "wrote " << written << " images to " << opt.out_dir.string() << " (" << errors.size()
        << " errors, seed " << seed.value << ")\nmanifest: " << manifest_path.string() << "\n";
  }
  if (all_failed) {
    err << "error: every input image failed\n";
    return 2;
  }
  return 0;
}

int CmdEvaluate(const CommonOptions& common, const EvaluateOptions& opt, std::ostream& out, std::ostream&) {
  const ConfigFile config = common.LoadConfigOrEmpty();
  const std::string mode = ResolveMode(opt.mode, config);
  const deteval::EvalConfig cfg = MakeEvalConfig(mode, opt.voc07);
  const auto gts = deteval::LoadGroundTruth(opt.gt);
  const auto dets = deteval::LoadDetections(opt.dets, gts);
  const auto result = deteval::Evaluate(dets, gts, cfg);

  json cats = json::array();
  for (std::size_t k = 0; k < result.categories.size(); ++k) {
    double sum = 0;
    int n = 0;
    for (const auto& per_t : result.ap) {
      if (per_t[k]) {
        sum += *per_t[k];
        ++n;
      }
    }
    cats.push_back({{"id", result.categories[k]}, {"ap", n ? json(100.0 * sum / n) : json(nullptr)}});
  }
  if (common.json) {
    out << json{{"ok", true},
                {"mode", mode},
                {"metric", MetricLabel(mode)},
                {"interpolation", deteval::InterpolationName(cfg.interpolation)},
                {"p", result.p},
                {"p_rounded", benchmark::RoundOneDecimal(result.p)},
                {"categories", cats}}
               .dump()
        << "\n";
  } else {
    out << "P [" << MetricLabel(mode) << ", " << deteval::InterpolationName(cfg.interpolation)
        << "] = " << Fixed1(result.p) << "\n";
    for (const auto& c : cats) {
      out << "  category " << c["id"].get<long long>() << ": "
          << (c["ap"].is_null() ? std::string("n/a (no ground truth)") : Fixed1(c["ap"].get<double>())) << "\n";
    }
  }
  return 0;
}

int CmdBenchRun(const CommonOptions& common, const BenchRunOptions& opt, std::ostream& out, std::ostream& err) {
  const ConfigFile config = common.LoadConfigOrEmpty();
  const std::string mode = ResolveMode(opt.mode, config);
  const deteval::EvalConfig cfg = MakeEvalConfig(mode, opt.voc07);
  omp_set_num_threads(ResolveJobs(opt.jobs, config));
  const auto gts = deteval::LoadGroundTruth(opt.gt);
  std::vector<fs::path> missing_files;
  const auto grid = benchmark::RunGrid(gts, opt.dets_dir, cfg, &missing_files);

  benchmark::ReportMetadata meta;
  meta.model = opt.model;
  meta.backbone = opt.backbone;
  meta.dataset = opt.dataset.value_or(opt.gt.stem().string());
  meta.metric_mode = mode;
  meta.interpolation = std::string(deteval::InterpolationName(cfg.interpolation));
  const SeedChoice seed = ResolveSeed(opt.seed, config, std::getenv("CORRUPTBENCH_SEED"));
  if (seed.explicit_choice()) meta.seed = seed.value;
  meta.tool_version = kVersion;
  meta.severity_table_hash = corruptions::SeverityTableHash();

  benchmark::BenchmarkReport report;
  try {
    report = benchmark::MakeReport(grid, meta, opt.allow_partial);
  } catch (const benchmark::IncompleteGrid& e) {
    json cells = json::array();
    err << "error: " << e.missing().size() << " benchmark cells have no detections file:\n";
    for (const auto& c : e.missing()) {
      err << "  " << c.corruption << " severity " << c.severity << "\n";
      cells.push_back({{"corruption", c.corruption}, {"severity", c.severity}});
    }
    err << "rerun with --allow-partial to aggregate the available cells\n";
    if (common.json) out << json{{"ok", false}, {"error", "incomplete grid"}, {"exit_code", 1}, {"missing", cells}}.dump() << "\n";
    return 1;
  }

  if (opt.out) {
    EnsureParent(*opt.out);
    benchmark::WriteReport(*opt.out, report);
    std::vector<fs::path> inputs;
    inputs.push_back(opt.dets_dir / "clean.json");
    for (const auto& info : corruptions::AllCorruptions()) {
      for (int s = 1; s <= corruptions::kNumSeverities; ++s) {
        const fs::path f = opt.dets_dir / std::string(info.name) / (std::to_string(s) + ".json");
        if (fs::exists(f)) inputs.push_back(f);
      }
    }
    json manifest = BaseManifest("bench run", common.args);
    manifest["mode"] = mode;
    manifest["interpolation"] = meta.interpolation;
    manifest["ground_truth"] = FileEntry(opt.gt);
    manifest["detections"] = FileList(inputs);
    manifest["outputs"] = json::array({FileEntry(*opt.out)});
    WriteJsonFile(SidecarManifest(*opt.out), manifest);
  }

  if (common.json) {
    json j = json::parse(benchmark::ToJson(report));
    j["ok"] = true;
    out << j.dump() << "\n";
  } else {
    const std::string unit = MetricLabel(mode);
    out << meta.model << " (" << meta.backbone << ") on " << meta.dataset << ", " << unit << ", "
        << meta.interpolation << "\n";
    out << "  P     = " << Fixed1(report.p_clean) << "\n  mPC   = " << Fixed1(report.mpc)
        << "\n  rPC   = " << Fixed1(report.rpc) << " %\n";
    if (report.partial) {
      out << "  partial grid: " << report.missing.size() << " of "
          << corruptions::kNumBenchmarkCorruptions * corruptions::kNumSeverities << " cells missing\n";
    }
    if (opt.out) out << "report: " << opt.out->string() << "\n";
  }
  return 0;
}

int CmdBenchReport(const CommonOptions& common, const BenchReportOptions& opt, std::ostream& out, std::ostream&) {
  if (opt.inputs.empty()) throw InvalidArgument("bench report needs at least one --in report");
  std::vector<benchmark::BenchmarkReport> reports;
  for (const auto& p : opt.inputs) reports.push_back(benchmark::ReadReport(p));

  std::string text;
  if (opt.format == "md") {
    text = benchmark::ToMarkdown(reports);
  } else if (opt.format == "csv") {
    text = benchmark::ToCsv(reports);
  } else if (opt.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(json::parse(benchmark::ToJson(r)));
    text = arr.dump(2) + "\n";
  } else {
    throw InvalidArgument("--format must be json, md or csv");
  }

  if (opt.out) {
    EnsureParent(*opt.out);
    WriteText(*opt.out, text);
    json manifest = BaseManifest("bench report", common.args);
    manifest["format"] = opt.format;
    manifest["inputs"] = FileList(opt.inputs);
    manifest["outputs"] = json::array({FileEntry(*opt.out)});
    WriteJsonFile(SidecarManifest(*opt.out), manifest);
  }
  if (common.json) {
    json j = {{"ok", true}, {"format", opt.format}, {"reports", reports.size()}};
    if (opt.out) {
      j["out"] = opt.out->generic_string();
    } else {
      j["content"] = text;
    }
    out << j.dump() << "\n";
  } else if (opt.out) {
    out << "wrote " << opt.out->string() << "\n";
  } else {
    out << text;
  }
  return 0;
}

int CmdAnalyzeImpact(const CommonOptions& common, const AnalyzeImpactOptions& opt, std::ostream& out,
                     std::ostream&) {
  const ConfigFile config = common.LoadConfigOrEmpty();
  const SeedChoice seed = ResolveSeed(opt.seed, config, std::getenv("CORRUPTBENCH_SEED"));
  omp_set_num_threads(ResolveJobs(opt.jobs, config));
  const auto report = benchmark::ReadReport(opt.grid);
  const auto corpus = analysis::LoadCorpus(opt.corpus);
  const auto selected = SelectCorruptions(opt.corruptions, false);
  const auto measurements = analysis::MeasureImpact(corpus, selected, seed.value);
  const auto table = analysis::BuildImpactTable(measurements, report.grid);

  EnsureParent(opt.out);
  WriteText(opt.out, analysis::ImpactCsv(table));
  json manifest = BaseManifest("analyze impact", common.args);
  manifest["seed"] = seed.value;
  manifest["seed_origin"] = seed.origin;
  manifest["averaging"] = analysis::kImpactAveraging;
  manifest["ssim"] = {{"window", analysis::kSsimWindow},
                      {"sigma", analysis::kSsimSigma},
                      {"c1", analysis::kSsimC1},
                      {"c2", analysis::kSsimC2},
                      {"channels", "mean over channels"}};
  manifest["rpc"] = "mean over severities of P, divided by P_clean, percent";
  manifest["model"] = report.metadata.model;
  manifest["grid"] = FileEntry(opt.grid);
  json images = json::array();
  for (const auto& img : corpus) images.push_back(FileEntry(opt.corpus / img.id));
  manifest["corpus"] = {{"path", opt.corpus.generic_string()}, {"images", images}};
  manifest["outputs"] = json::array({FileEntry(opt.out)});
  WriteJsonFile(SidecarManifest(opt.out), manifest);

  if (common.json) {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"corruption", r.corruption}, {"group", r.group}, {"rmse", r.rmse}, {"ssim", r.ssim}, {"rpc", r.rpc}});
    }
    out << json{{"ok", true},
                {"rows", rows},
                {"pearson_rmse", table.pearson_rmse},
                {"pearson_ssim", table.pearson_ssim},
                {"images", corpus.size()},
                {"averaging", analysis::kImpactAveraging},
                {"out", opt.out.generic_string()}}
               .dump()
        << "\n";
  } else {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "r(rPC, RMSE) = %.3f\nr(rPC, SSIM) = %.3f\n", table.pearson_rmse,
                  table.pearson_ssim);
    out << table.rows.size() << " corruptions over " << corpus.size() << " images (" << analysis::kImpactAveraging
        << ")\n"
        << buf << "table: " << opt.out.string() << "\n";
  }
  return 0;
}

int CmdStylize(const CommonOptions& common, const StylizeOptions& opt, std::ostream& out, std::ostream&) {
  if (!imaging::IsSupportedImagePath(opt.out)) throw InvalidArgument("--out must end in .png, .jpg or .jpeg");
  const auto content = imaging::ReadImage(opt.content);
  const auto style = imaging::ReadImage(opt.style);
  const auto result = stylize::StylizeImage(content, style, opt.alpha);
  EnsureParent(opt.out);
  imaging::WriteImage(opt.out, result);
  json manifest = BaseManifest("stylize", common.args);
  manifest["alpha"] = opt.alpha;
  manifest["epsilon"] = stylize::kAdainEpsilon;
  manifest["space"] = "pixel";
  manifest["inputs"] = json::array({FileEntry(opt.content), FileEntry(opt.style)});
  manifest["outputs"] = json::array({FileEntry(opt.out)});
  WriteJsonFile(SidecarManifest(opt.out), manifest);
  if (common.json) {
    out << json{{"ok", true},
                {"out", opt.out.generic_string()},
                {"width", result.width()},
                {"height", result.height()},
                {"channels", result.channels()}}
               .dump()
        << "\n";
  } else {
    out << "wrote " << opt.out.string() << " (" << result.width() << "x" << result.height() << ", alpha "
        << opt.alpha << ")\n";
  }
  return 0;
}

}  // namespace corruptbench::cli
