// privfeat/tools/cmd-score.cc

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
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "cli.h"
#include "privfeat/annotation.h"
#include "privfeat/classification.h"
#include "privfeat/der.h"
#include "privfeat/eer.h"
#include "privfeat/error.h"
#include "privfeat/logging.h"
#include "privfeat/score-io.h"
#include "privfeat/wer.h"

namespace privfeat::cli {

namespace {

struct ScoreOptions {
  std::string kind;
  std::string ref, hyp, trials, input;
  std::string set_name = "all";
  double collar_s = 0.25;
  std::string overlap = "include";
  bool strip_punct = false;
  bool no_case_fold = false;
  std::string report;
};

std::string Fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

void ScoreWer(const ScoreOptions &o, std::ostream &os) {
  if (o.ref.empty() || o.hyp.empty())
    throw Error(ErrorKind::kConfig, "wer needs --ref and --hyp");
  TokenizeOptions tok;
  tok.case_fold = !o.no_case_fold;
  tok.strip_punctuation = o.strip_punct;
  std::map<std::string, std::string> hyp;
  for (const Transcript &t : ReadTranscripts(o.hyp)) hyp[t.utterance_id] = t.text;

  os << "set,utterance_id,n_sub,n_ins,n_del,n_tok,wer\n";
  WerBreakdown total;
  for (const Transcript &r : ReadTranscripts(o.ref)) {
    const auto it = hyp.find(r.utterance_id);
    if (it == hyp.end())
      LogWarning("no hypothesis for " + r.utterance_id + "; scoring as empty");
    const WerBreakdown w =
        ComputeWer(Tokenize(r.text, tok),
                   Tokenize(it == hyp.end() ? "" : it->second, tok));
    total += w;
    os << o.set_name << ',' << r.utterance_id << ',' << w.n_sub << ','
       << w.n_ins << ',' << w.n_del << ',' << w.n_tok << ',' << Fixed(w.wer)
       << '\n';
  }
  os << o.set_name << ",ALL," << total.n_sub << ',' << total.n_ins << ','
     << total.n_del << ',' << total.n_tok << ',' << Fixed(total.wer) << '\n';
}

void ScoreEer(const ScoreOptions &o, std::ostream &os) {
  if (o.trials.empty()) throw Error(ErrorKind::kConfig, "eer needs --trials");
  const std::vector<TrialScore> trials = ReadTrials(o.trials);
  std::size_t n_target = 0;
  for (const TrialScore &t : trials) n_target += t.is_target;
  const EerResult r = ComputeEer(trials);
  char thr[48];
  std::snprintf(thr, sizeof(thr), "%.9g", r.threshold);
  os << "set,n_target,n_nontarget,eer,threshold\n"
     << o.set_name << ',' << n_target << ',' << trials.size() - n_target << ','
     << Fixed(r.eer) << ',' << thr << '\n';
}

void ScoreMcc(const ScoreOptions &o, std::ostream &os) {
  if (o.ref.empty() || o.hyp.empty())
    throw Error(ErrorKind::kConfig, "mcc needs --ref and --hyp frame labels");
  std::map<std::string, std::vector<bool>> hyp;
  for (FrameLabels &l : ReadFrameLabels(o.hyp))
    hyp[l.utterance_id] = std::move(l.speech);

  os << "set,utterance_id,tp,tn,fp,fn,mcc\n";
  ConfusionCounts total;
  for (const FrameLabels &r : ReadFrameLabels(o.ref)) {
    const auto it = hyp.find(r.utterance_id);
    if (it == hyp.end()) {
      LogWarning("no hypothesis labels for " + r.utterance_id + "; skipped");
      continue;
    }
    if (it->second.size() != r.speech.size())
      LogWarning(r.utterance_id + ": label counts differ; scoring the "
                                  "common prefix");
    const std::vector<bool> &h = it->second;
    // std::vector<bool> has no contiguous storage; copy into spans of bool.
    std::unique_ptr<bool[]> rb(new bool[r.speech.size()]);
    std::unique_ptr<bool[]> hb(new bool[h.size()]);
    std::copy(r.speech.begin(), r.speech.end(), rb.get());
    std::copy(h.begin(), h.end(), hb.get());
    const ConfusionCounts c = CountConfusion({rb.get(), r.speech.size()},
                                             {hb.get(), h.size()});
    total += c;
    os << o.set_name << ',' << r.utterance_id << ',' << c.tp << ',' << c.tn
       << ',' << c.fp << ',' << c.fn << ',' << Fixed(ComputeMcc(c)) << '\n';
  }
  os << o.set_name << ",ALL," << total.tp << ',' << total.tn << ','
     << total.fp << ',' << total.fn << ',' << Fixed(ComputeMcc(total)) << '\n';
}

void ScoreDer(const ScoreOptions &o, std::ostream &os) {
  if (o.ref.empty() || o.hyp.empty())
    throw Error(ErrorKind::kConfig, "der needs --ref and --hyp RTTM files");
  DerOptions opts;
  opts.collar_s = o.collar_s;
  opts.include_overlap = o.overlap == "include";
  std::map<std::string, SegmentAnnotation> hyp;
  for (SegmentAnnotation &a : ReadRttm(o.hyp)) hyp[a.recording_id] = std::move(a);

  os << "set,recording_id,fa_s,miss_s,error_s,total_s,der\n";
  DerBreakdown total;
  auto row = [&](const std::string &id, const DerBreakdown &d) {
    os << o.set_name << ',' << id << ',' << Fixed(d.fa_s) << ','
       << Fixed(d.miss_s) << ',' << Fixed(d.error_s) << ',' << Fixed(d.total_s)
       << ',' << Fixed(d.der) << '\n';
  };
  for (const SegmentAnnotation &ref : ReadRttm(o.ref)) {
    const auto it = hyp.find(ref.recording_id);
    SegmentAnnotation empty{ref.recording_id, {}};
    if (it == hyp.end())
      LogWarning("no hypothesis for " + ref.recording_id + "; all speech missed");
    const DerBreakdown d =
        ComputeDer(ref, it == hyp.end() ? empty : it->second, opts);
    total += d;
    row(ref.recording_id, d);
  }
  row("ALL", total);
}

void ScoreAverage(const ScoreOptions &o, std::ostream &os) {
  if (o.input.empty())
    throw Error(ErrorKind::kConfig, "avg needs --input set,weight,value CSV");
  std::ifstream is(o.input);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + o.input);
  std::vector<std::string> names;
  std::vector<double> weights, values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string name, w, v;
    if (!std::getline(ss, name, ',') || !std::getline(ss, w, ',') ||
        !std::getline(ss, v))
      throw Error(ErrorKind::kParse,
                  o.input + " line " + std::to_string(line_no) +
                      ": expected set,weight,value");
    if (line_no == 1 && name == "set") continue;
    names.push_back(name);
    weights.push_back(std::stod(w));
    values.push_back(std::stod(v));
  }
  const double avg = WeightedAverage(values, weights);
  double wsum = 0.0;
  os << "set,weight,value\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    wsum += weights[i];
    os << names[i] << ',' << Fixed(weights[i]) << ',' << Fixed(values[i])
       << '\n';
  }
  os << "weighted_average," << Fixed(wsum) << ',' << Fixed(avg) << '\n';
}

int RunScore(const ScoreOptions &o) {
  std::ostringstream report;
  if (o.kind == "wer") ScoreWer(o, report);
  else if (o.kind == "eer") ScoreEer(o, report);
  else if (o.kind == "mcc") ScoreMcc(o, report);
  else if (o.kind == "der") ScoreDer(o, report);
  else ScoreAverage(o, report);

  if (o.report.empty()) {
    std::cout << report.str();
    return 0;
  }
  const std::filesystem::path path = o.report;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  os << report.str();

  RunConfig rc;
  rc.Set("command", "score");
  rc.Set("kind", o.kind);
  for (const auto &[key, value] :
       {std::pair<const char *, const std::string &>{"ref", o.ref},
        {"hyp", o.hyp},
        {"trials", o.trials},
        {"input", o.input}})
    if (!value.empty()) rc.Set(key, value);
  rc.Set("set", o.set_name);
  if (o.kind == "der") {
    rc.Set("collar", o.collar_s);
    rc.Set("overlap", o.overlap);
  }
  if (o.kind == "wer") {
    rc.Set("strip-punct", o.strip_punct);
    rc.Set("no-case-fold", o.no_case_fold);
  }
  rc.Set("report", path.string());
  rc.Write(path.string() + ".config.txt");
  return 0;
}

}  // namespace

CommandRunner AddScoreCommand(CLI::App &app) {
  auto opts = std::make_shared<ScoreOptions>();
  CLI::App *sub = app.add_subcommand(
      "score", "Score WER, EER, MCC, DER or a weighted average to CSV");
  sub->add_option("--kind", opts->kind, "wer | eer | mcc | der | avg")
      ->required()
      ->check(CLI::IsMember({"wer", "eer", "mcc", "der", "avg"}));
  sub->add_option("--ref", opts->ref,
                  "reference transcripts (wer), frame labels (mcc) or RTTM "
                  "(der)");
  sub->add_option("--hyp", opts->hyp, "hypothesis file, same format as --ref");
  sub->add_option("--trials", opts->trials,
                  "`<target|nontarget> <score>` per line (eer)");
  sub->add_option("--input", opts->input, "set,weight,value CSV (avg)");
  sub->add_option("--set", opts->set_name, "label for the report's set column");
  sub->add_option("--collar", opts->collar_s,
                  "DER forgiveness collar in seconds")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--overlap", opts->overlap, "include | exclude")
      ->check(CLI::IsMember({"include", "exclude"}));
  sub->add_flag("--strip-punct", opts->strip_punct,
                "drop punctuation before WER alignment");
  sub->add_flag("--no-case-fold", opts->no_case_fold,
                "keep case when comparing WER tokens");
  sub->add_option("--report", opts->report, "CSV output path (default stdout)");
  return [opts] { return RunScore(*opts); };
}

}  // namespace privfeat::cli
