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
#include "cli/cli.h"

#include <exception>
#include <filesystem>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/commands.h"
#include "corruptbench/common/error.h"
#include "corruptbench/version.h"

namespace corruptbench::cli {
namespace {

constexpr const char* kConfigHelp =
    "key = value file with defaults for seed, jobs and mode; flags override it, and it overrides "
    "CORRUPTBENCH_SEED";

void AddCommon(CLI::App* app, CommonOptions& common) {
  app->add_option("--config", common.config_path, kConfigHelp)->check(CLI::ExistingFile);
  app->add_flag("--json", common.json, "Machine-readable JSON on stdout");
}

int ReportError(const CommonOptions& common, std::ostream& out, std::ostream& err, const std::string& message,
                int code) {
  err << "error: " << message << "\n";
  if (common.json) {
    out << nlohmann::json{{"ok", false}, {"error", message}, {"exit_code", code}}.dump() << "\n";
  }
  return code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Corruption robustness benchmark for object detection", "corruptbench"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOptions common;
  common.args = args;

  CorruptOptions corrupt;
  auto* c = app.add_subcommand("corrupt", "Write corrupted copies of an image tree as <out>/<corruption>/<severity>/<relpath>");
  c->add_option("--in", corrupt.in_dir, "Input image directory (PNG/JPEG, searched recursively)")->required();
  c->add_option("--out", corrupt.out_dir, "Output root; manifest.json is written here")->required();
  c->add_option("--corruption", corrupt.corruptions,
                "Corruption name (repeatable); default is the 15 benchmark corruptions");
  c->add_option("--severity", corrupt.severities, "Severity 1..5 (repeatable); default all five")
      ->check(CLI::Range(1, 5));
  c->add_flag("--validation", corrupt.validation, "Use the 4 held-out validation corruptions instead");
  c->add_option("--seed", corrupt.seed, "Base seed; default from --config, then CORRUPTBENCH_SEED, then 0");
  c->add_option("--jobs", corrupt.jobs, "Worker threads; outputs do not depend on it")->check(CLI::PositiveNumber);
  c->add_option("--jpeg-quality", corrupt.jpeg_quality, "Quality for outputs whose input was JPEG")->capture_default_str()
      ->check(CLI::Range(1, 100));
  AddCommon(c, common);

  EvaluateOptions evaluate;
  auto* e = app.add_subcommand("evaluate", "Score one detections file against COCO-style ground truth");
  e->add_option("--gt", evaluate.gt, "Ground-truth JSON (images, annotations, categories)")
      ->required()
      ->check(CLI::ExistingFile);
  e->add_option("--dets", evaluate.dets, "Detections JSON (list of image_id, category_id, bbox, score)")
      ->required()
      ->check(CLI::ExistingFile);
  e->add_option("--mode", evaluate.mode, "coco (AP@[.50:.95], 101-point) or pascal (AP50, all-point)")
      ->check(CLI::IsMember({"coco", "pascal"}));
  e->add_flag("--voc07", evaluate.voc07, "PASCAL only: 11-point interpolation");
  AddCommon(e, common);

  auto* bench = app.add_subcommand("bench", "Benchmark grids and reports");
  bench->require_subcommand(1);
  BenchRunOptions run;
  auto* br = bench->add_subcommand("run", "Evaluate clean.json and <corruption>/<severity>.json, then compute P, mPC, rPC");
  br->add_option("--gt", run.gt, "Ground-truth JSON")->required()->check(CLI::ExistingFile);
  br->add_option("--dets", run.dets_dir, "Directory holding clean.json and <corruption>/<severity>.json")
      ->required()
      ->check(CLI::ExistingDirectory);
  br->add_option("--mode", run.mode, "coco or pascal")->check(CLI::IsMember({"coco", "pascal"}));
  br->add_flag("--voc07", run.voc07, "PASCAL only: 11-point interpolation");
  br->add_option("--out", run.out, "Write the report JSON here (plus <out>.manifest.json)");
  br->add_flag("--allow-partial", run.allow_partial, "Aggregate over the cells present instead of failing");
  br->add_option("--model", run.model, "Model name for the report")->capture_default_str();
  br->add_option("--backbone", run.backbone, "Backbone name for the report")->capture_default_str();
  br->add_option("--dataset", run.dataset, "Dataset label; default is the ground-truth file stem");
  br->add_option("--seed", run.seed, "Seed the corrupted dataset was generated with (recorded only)");
  br->add_option("--jobs", run.jobs, "Worker threads")->check(CLI::PositiveNumber);
  AddCommon(br, common);

  BenchReportOptions rep;
  auto* bp = bench->add_subcommand("report", "Render one or more report JSON files, ranked by mPC");
  bp->add_option("--in", rep.inputs, "Report JSON (repeatable)")->required()->check(CLI::ExistingFile);
  bp->add_option("--format", rep.format, "json, md or csv")->capture_default_str()->check(CLI::IsMember({"json", "md", "csv"}));
  bp->add_option("--out", rep.out, "Write to a file (plus <out>.manifest.json) instead of stdout");
  AddCommon(bp, common);

  auto* analyze = app.add_subcommand("analyze", "Corruption impact analysis");
  analyze->require_subcommand(1);
  AnalyzeImpactOptions impact;
  auto* ai = analyze->add_subcommand("impact", "Per-corruption RMSE, SSIM and rPC with Pearson correlations (CSV)");
  ai->add_option("--corpus", impact.corpus, "Directory of clean images")->required()->check(CLI::ExistingDirectory);
  ai->add_option("--grid", impact.grid, "Report JSON from bench run")->required()->check(CLI::ExistingFile);
  ai->add_option("--out", impact.out, "CSV path (plus <out>.manifest.json)")->required();
  ai->add_option("--corruption", impact.corruptions, "Restrict to these corruptions (repeatable)");
  ai->add_option("--seed", impact.seed, "Corruption seed");
  ai->add_option("--jobs", impact.jobs, "Worker threads")->check(CLI::PositiveNumber);
  AddCommon(ai, common);

  StylizeOptions sty;
  auto* st = app.add_subcommand("stylize", "Pixel-space AdaIN colour-statistics transfer");
  st->add_option("--content", sty.content, "Content image")->required()->check(CLI::ExistingFile);
  st->add_option("--style", sty.style, "Style image")->required()->check(CLI::ExistingFile);
  st->add_option("--alpha", sty.alpha, "Blend between content (0) and full transfer (1)")->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  st->add_option("--out", sty.out, "Output image (.png/.jpg; plus <out>.manifest.json)")->required();
  AddCommon(st, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::Normal);
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    return ReportError(common, out, err, ex.what(), kExitInvalid);
  }

  try {
    if (c->parsed()) return CmdCorrupt(common, corrupt, out, err);
    if (e->parsed()) return CmdEvaluate(common, evaluate, out, err);
    if (br->parsed()) return CmdBenchRun(common, run, out, err);
    if (bp->parsed()) return CmdBenchReport(common, rep, out, err);
    if (ai->parsed()) return CmdAnalyzeImpact(common, impact, out, err);
    if (st->parsed()) return CmdStylize(common, sty, out, err);
  } catch (const InvalidArgument& ex) {
    return ReportError(common, out, err, ex.what(), kExitInvalid);
  } catch (const std::invalid_argument& ex) {
    return ReportError(common, out, err, ex.what(), kExitInvalid);
  } catch (const IoError& ex) {
    return ReportError(common, out, err, ex.what(), kExitIo);
  } catch (const std::filesystem::filesystem_error& ex) {
    return ReportError(common, out, err, ex.what(), kExitIo);
  } catch (const std::exception& ex) {
    return ReportError(common, out, err, ex.what(), kExitIo);
  }
  return ReportError(common, out, err, "no command given", kExitInvalid);
}

}  // namespace corruptbench::cli
