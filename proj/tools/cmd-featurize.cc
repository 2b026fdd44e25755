// privfeat/tools/cmd-featurize.cc

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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "CLI11.hpp"
#include "cli.h"
#include "privfeat/audio.h"
#include "privfeat/error.h"
#include "privfeat/feature-io.h"
#include "privfeat/logging.h"
#include "privfeat/mel.h"
#include "privfeat/olmega.h"

namespace privfeat::cli {

namespace {

struct FeaturizeOptions {
  std::vector<std::string> inputs;
  std::string list;
  std::string variant = "standard";
  int n_mels = 80;
  double fmin_hz = 0.0;
  double fmax_hz = 8000.0;
  std::string format = "csv";
  std::string out;
  int jobs = 1;
};

struct FileResult {
  std::string output;
  std::size_t rows = 0, cols = 0;
  double hop_s = 0.0;
  std::string status;
};

int RunFeaturize(const FeaturizeOptions &o) {
  std::vector<std::string> inputs = o.inputs;
  if (!o.list.empty()) {
    auto listed = ReadListFile(o.list);
    inputs.insert(inputs.end(), listed.begin(), listed.end());
  }
  if (inputs.empty()) throw Error(ErrorKind::kConfig, "no input files");

  const FeatureVariant variant = ParseFeatureVariant(o.variant);
  const bool binary = o.format == "bin";
  if (!binary && o.format != "csv")
    throw Error(ErrorKind::kConfig, "format must be csv or bin");
  const std::filesystem::path out_dir = PrepareOutDir(o.out);

  const OlmegaConfig olmega;
  const FrameConfig standard = FrameConfig::Standard();
  const std::size_t win = MsToSamples(
      variant == FeatureVariant::kOlmega ? olmega.window_len_ms
                                         : standard.window_len_ms,
      kPipelineSampleRate);
  const MelFilterbank fb = BuildMelFilterbank(
      o.n_mels, NextPowerOfTwo(win), kPipelineSampleRate, o.fmin_hz, o.fmax_hz);

  // Output names are <stem>.<variant>.<ext>; repeated stems get an index.
  std::vector<std::filesystem::path> outputs;
  std::set<std::string> used;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string stem = std::filesystem::path(inputs[i]).stem().string();
    if (!used.insert(stem).second) stem += "_" + std::to_string(i);
    outputs.push_back(out_dir / (stem + "." + std::string(FeatureVariantName(variant)) +
                                 (binary ? ".bin" : ".csv")));
  }

  std::vector<FileResult> results(inputs.size());
  ParallelFor(inputs.size(), o.jobs, [&](std::size_t i) {
    FileResult &r = results[i];
    try {
      const AudioSignal signal = ReadWav(inputs[i]);
      const FeatureMatrix fm = variant == FeatureVariant::kOlmega
                                   ? OlmegaFeatures(signal, olmega, fb)
                                   : StandardFeatures(signal, fb, standard);
      WriteFeatures(fm, outputs[i],
                    binary ? FeatureFormat::kBinary : FeatureFormat::kCsv);
      r = {outputs[i].string(), fm.num_frames(), fm.num_mels(), fm.frame_hop_s,
           "ok"};
    } catch (const std::exception &e) {
      LogWarning(inputs[i] + ": " + e.what());
      r.status = std::string("failed: ") + e.what();
    }
  });

  std::ofstream summary(out_dir / "featurize_summary.csv");
  summary << "input,output,rows,cols,hop_s,status\n";
  std::size_t ok = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const FileResult &r = results[i];
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    summary << inputs[i] << ',' << r.output << ',' << r.rows << ',' << r.cols
            << ',' << r.hop_s << ',' << status << '\n';
    ok += r.status == "ok";
  }

  RunConfig cfg;
  cfg.Set("command", "featurize");
  if (!o.list.empty()) cfg.Set("list", o.list);
  cfg.Set("variant", o.variant);
  cfg.Set("n-mels", o.n_mels);
  cfg.Set("fmin", o.fmin_hz);
  cfg.Set("fmax", o.fmax_hz);
  cfg.Set("format", o.format);
  cfg.Set("out", out_dir.string());
  cfg.Set("jobs", o.jobs);
  cfg.Write(out_dir / "run_config.txt");

  LogInfo("featurized " + std::to_string(ok) + " of " +
          std::to_string(inputs.size()) + " files");
  if (ok == inputs.size()) return 0;
  return ok == 0 ? 1 : 2;
}

}  // namespace

CommandRunner AddFeaturizeCommand(CLI::App &app) {
  auto opts = std::make_shared<FeaturizeOptions>();
  CLI::App *sub = app.add_subcommand(
      "featurize", "Compute standard or olMEGA log Mel features for WAV files");
  sub->add_option("inputs", opts->inputs, "input WAV files (16 kHz)");
  sub->add_option("--list", opts->list, "file with one input WAV per line");
  sub->add_option("--variant", opts->variant, "standard | olmega")
      ->check(CLI::IsMember({"standard", "olmega"}));
  sub->add_option("--n-mels", opts->n_mels, "Mel filterbank size")
      ->check(CLI::PositiveNumber);
  sub->add_option("--fmin", opts->fmin_hz, "lowest filter edge in Hz");
  sub->add_option("--fmax", opts->fmax_hz, "highest filter edge in Hz");
  sub->add_option("--format", opts->format, "csv | bin")
      ->check(CLI::IsMember({"csv", "bin"}));
  sub->add_option("--out", opts->out, "output directory")->envname(kOutDirEnv);
  sub->add_option("--jobs", opts->jobs, "parallel files")
      ->check(CLI::PositiveNumber);
  return [opts] { return RunFeaturize(*opts); };
}

}  // namespace privfeat::cli
