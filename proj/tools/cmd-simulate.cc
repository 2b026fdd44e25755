// privfeat/tools/cmd-simulate.cc

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

#include <filesystem>
#include <fstream>
#include <memory>

#include "CLI11.hpp"
#include "cli.h"
#include "json.hpp"
#include "privfeat/annotation.h"
#include "privfeat/audio.h"
#include "privfeat/error.h"
#include "privfeat/logging.h"
#include "privfeat/simulator.h"

namespace privfeat::cli {

namespace {

struct SimulateOptions {
  std::string pool;
  int n_meetings = 1;
  std::uint64_t seed = 0;
  double gap_min_s = 0.1;
  double gap_max_s = 2.0;
  double threshold_db = 40.0;
  double min_voiced_ms = 100.0;
  bool normalize_gain = false;
  double target_dbfs = -25.0;
  std::string out;
  int jobs = 1;
};

nlohmann::json PlanToJson(const MeetingPlan &plan) {
  nlohmann::json j;
  j["meeting_id"] = plan.meeting_id;
  j["participants"] = plan.participants;
  j["seed"] = plan.seed;
  j["sample_rate"] = plan.sample_rate;
  j["duration_s"] = static_cast<double>(plan.total_samples) / plan.sample_rate;
  j["timeline"] = nlohmann::json::array();
  for (const TimelineEntry &e : plan.timeline) {
    j["timeline"].push_back({{"speaker_id", e.speaker_id},
                             {"utterance_id", e.utterance_id},
                             {"onset_s", plan.OnsetSeconds(e)},
                             {"duration_s", plan.DurationSeconds(e)}});
  }
  return j;
}

int RunSimulate(const SimulateOptions &o) {
  if (o.pool.empty()) throw Error(ErrorKind::kConfig, "--pool is required");
  const std::filesystem::path out_dir = PrepareOutDir(o.out);

  TrimOptions trim;
  trim.threshold_db = o.threshold_db;
  trim.min_voiced_ms = o.min_voiced_ms;
  const LoadedPool loaded =
      LoadPool(ReadPoolManifest(o.pool), trim, o.normalize_gain, o.target_dbfs);

  PlanOptions plan_opts;
  plan_opts.gap_min_s = o.gap_min_s;
  plan_opts.gap_max_s = o.gap_max_s;
  const std::vector<MeetingPlan> plans =
      PlanMeetings(loaded.pool, o.n_meetings, o.seed, plan_opts);

  std::vector<std::string> errors(plans.size());
  ParallelFor(plans.size(), o.jobs, [&](std::size_t i) {
    try {
      const RenderedMeeting m = RenderMeeting(plans[i], loaded.audio);
      WriteWav(m.audio, out_dir / (plans[i].meeting_id + ".wav"));
      WriteRttm(m.annotation, out_dir / (plans[i].meeting_id + ".rttm"));
    } catch (const std::exception &e) {
      errors[i] = e.what();
    }
  });

  std::ofstream manifest(out_dir / "meetings.jsonl");
  std::size_t ok = 0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    if (!errors[i].empty()) {
      LogWarning(plans[i].meeting_id + ": " + errors[i]);
      continue;
    }
    manifest << PlanToJson(plans[i]).dump() << '\n';
    ++ok;
  }

  RunConfig rc;
  rc.Set("command", "simulate");
  rc.Set("pool", o.pool);
  rc.Set("n-meetings", o.n_meetings);
  rc.Set("seed", std::to_string(o.seed));
  rc.Set("gap-min", o.gap_min_s);
  rc.Set("gap-max", o.gap_max_s);
  rc.Set("threshold-db", o.threshold_db);
  rc.Set("min-voiced-ms", o.min_voiced_ms);
  rc.Set("normalize-gain", o.normalize_gain);
  rc.Set("target-dbfs", o.target_dbfs);
  rc.Set("out", out_dir.string());
  rc.Set("jobs", o.jobs);
  rc.Write(out_dir / "run_config.txt");

  if (ok < static_cast<std::size_t>(o.n_meetings)) {
    LogWarning("produced " + std::to_string(ok) + " of " +
               std::to_string(o.n_meetings) + " requested meetings");
    return ok == 0 ? 1 : 2;
  }
  return 0;
}

}  // namespace

CommandRunner AddSimulateCommand(CLI::App &app) {
  auto opts = std::make_shared<SimulateOptions>();
  CLI::App *sub = app.add_subcommand(
      "simulate", "Build non-overlapping 3-4 speaker meetings from a pool");
  sub->add_option("--pool", opts->pool,
                  "CSV manifest speaker_id,utterance_id,path");
  sub->add_option("--n-meetings", opts->n_meetings, "meetings to generate")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", opts->seed, "global seed");
  sub->add_option("--gap-min", opts->gap_min_s, "shortest pause in seconds");
  sub->add_option("--gap-max", opts->gap_max_s, "longest pause in seconds");
  sub->add_option("--threshold-db", opts->threshold_db,
                  "trim threshold below the loudest frame");
  sub->add_option("--min-voiced-ms", opts->min_voiced_ms,
                  "shortest voiced run kept by trimming");
  sub->add_flag("--normalize-gain", opts->normalize_gain,
                "scale every trimmed utterance to --target-dbfs RMS");
  sub->add_option("--target-dbfs", opts->target_dbfs, "RMS level for gain "
                                                      "normalization");
  sub->add_option("--out", opts->out, "output directory")->envname(kOutDirEnv);
  sub->add_option("--jobs", opts->jobs, "parallel meetings")
      ->check(CLI::PositiveNumber);
  return [opts] { return RunSimulate(*opts); };
}

}  // namespace privfeat::cli
