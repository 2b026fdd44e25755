// privfeat/tools/cmd-anonymize.cc

// Copyright 2026  privfeat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "cli.h"
#include "privfeat/audio.h"
#include "privfeat/error.h"
#include "privfeat/logging.h"
#include "privfeat/mcadams.h"
#include "privfeat/random.h"

namespace privfeat::cli {

namespace {

struct AnonymizeOptions {
  std::vector<std::string> inputs;
  std::string list;
  double alpha_low = 0.5;
  double alpha_high = 0.9;
  std::optional<double> fixed_alpha;
  std::string scope = "utterance";
  std::uint64_t seed = 0;
  int lpc_order = 20;
  std::string out;
  int jobs = 1;
};

struct Item {
  std::string path;
  std::string group;  // meeting key; empty in utterance scope
};

std::vector<Item> CollectItems(const AnonymizeOptions &o) {
  std::vector<Item> items;
  for (const std::string &p : o.inputs) items.push_back({p, p});
  if (!o.list.empty()) {
    for (const std::string &line : ReadListFile(o.list)) {
      const auto comma = line.find(',');
      if (comma == std::string::npos)
        items.push_back({line, line});
      else
        items.push_back({line.substr(0, comma), line.substr(comma + 1)});
    }
  }
  return items;
}

std::string FormatDouble(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int RunAnonymize(const AnonymizeOptions &o) {
  const std::vector<Item> items = CollectItems(o);
  if (items.empty()) throw Error(ErrorKind::kConfig, "no input files");
  const bool meeting_scope = o.scope == "meeting";

  McAdamsConfig cfg;
  cfg.alpha_range = {o.alpha_low, o.alpha_high};
  cfg.lpc_order = o.lpc_order;
  cfg.seed = o.seed;
  cfg.fixed_alpha = o.fixed_alpha;
  cfg.Validate(kPipelineSampleRate);
  const std::filesystem::path out_dir = PrepareOutDir(o.out);

  // One seed per utterance, or per meeting group in meeting scope (groups
  // numbered in order of first appearance).
  std::vector<std::uint64_t> seeds(items.size());
  std::vector<double> alphas(items.size());
  std::map<std::string, std::size_t> group_index;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::uint64_t key = i;
    if (meeting_scope) {
      auto [it, inserted] =
          group_index.try_emplace(items[i].group, group_index.size());
      key = it->second;
    }
    seeds[i] = DeriveSeed(o.seed, key);
    Rng rng(seeds[i]);
    alphas[i] = cfg.fixed_alpha ? *cfg.fixed_alpha
                                : DrawAlpha(cfg.alpha_range, rng);
  }

  std::vector<std::filesystem::path> outputs;
  std::set<std::string> used;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string stem = std::filesystem::path(items[i].path).stem().string();
    if (!used.insert(stem).second) stem += "_" + std::to_string(i);
    outputs.push_back(out_dir / (stem + ".wav"));
  }

  std::vector<bool> ok(items.size(), false);
  ParallelFor(items.size(), o.jobs, [&](std::size_t i) {
    try {
      const AudioSignal in = ReadWav(items[i].path);
      const AnonymizedUtterance res = AnonymizeWithAlpha(in, cfg, alphas[i]);
      WriteWav(res.signal, outputs[i]);
      ok[i] = true;
    } catch (const std::exception &e) {
      LogWarning(items[i].path + ": " + e.what());
    }
  });

  std::ofstream manifest(out_dir / "anonymize_manifest.csv");
  manifest << "input_path,output_path,alpha_used,seed\n";
  std::size_t n_ok = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!ok[i]) continue;
    ++n_ok;
    manifest << items[i].path << ',' << outputs[i].string() << ','
             << FormatDouble(alphas[i]) << ',' << seeds[i] << '\n';
  }

  RunConfig rc;
  rc.Set("command", "anonymize");
  if (!o.list.empty()) rc.Set("list", o.list);
  rc.Set("alpha-low", o.alpha_low);
  rc.Set("alpha-high", o.alpha_high);
  if (o.fixed_alpha) rc.Set("fixed-alpha", *o.fixed_alpha);
  rc.Set("scope", o.scope);
  rc.Set("seed", std::to_string(o.seed));
  rc.Set("lpc-order", o.lpc_order);
  rc.Set("out", out_dir.string());
  rc.Set("jobs", o.jobs);
  rc.Write(out_dir / "run_config.txt");

  LogInfo("anonymized " + std::to_string(n_ok) + " of " +
          std::to_string(items.size()) + " files");
  if (n_ok == items.size()) return 0;
  return n_ok == 0 ? 1 : 2;
}

}  // namespace

CommandRunner AddAnonymizeCommand(CLI::App &app) {
  auto opts = std::make_shared<AnonymizeOptions>();
  CLI::App *sub = app.add_subcommand(
      "anonymize", "McAdams-coefficient anonymization of WAV files");
  sub->add_option("inputs", opts->inputs, "input WAV files (16 kHz)");
  sub->add_option("--list", opts->list,
                  "file with `path[,group]` per line; group keys meetings");
  sub->add_option("--alpha-low", opts->alpha_low, "lower end of alpha range");
  sub->add_option("--alpha-high", opts->alpha_high, "upper end of alpha range");
  sub->add_option("--fixed-alpha", opts->fixed_alpha,
                  "use this coefficient for every file (alpha=1 is identity)");
  sub->add_option("--scope", opts->scope,
                  "utterance: one alpha per file; meeting: one per group")
      ->check(CLI::IsMember({"utterance", "meeting"}));
  sub->add_option("--seed", opts->seed, "global seed");
  sub->add_option("--lpc-order", opts->lpc_order, "LPC order");
  sub->add_option("--out", opts->out, "output directory")->envname(kOutDirEnv);
  sub->add_option("--jobs", opts->jobs, "parallel files")
      ->check(CLI::PositiveNumber);
  return [opts] { return RunAnonymize(*opts); };
}

}  // namespace privfeat::cli
