// privfeat/score-io.cc

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

#include "privfeat/score-io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "privfeat/error.h"

namespace privfeat {

namespace {

std::ifstream Open(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return is;
}

std::string LineError(std::size_t line_no, const std::string &what) {
  return "line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

std::vector<TrialScore> ReadTrials(std::istream &is) {
  std::vector<TrialScore> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string label, score_text, extra;
    if (!(ss >> label) || label[0] == '#') continue;
    if (!(ss >> score_text) || (ss >> extra))
      throw Error(ErrorKind::kParse,
                  LineError(line_no, "expected '<target|nontarget> <score>'"));
    TrialScore t;
    if (label == "target") t.is_target = true;
    else if (label == "nontarget") t.is_target = false;
    else
      throw Error(ErrorKind::kParse,
                  LineError(line_no, "unknown trial label '" + label + "'"));
    std::size_t used = 0;
    try {
      t.score = std::stod(score_text, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != score_text.size() || !std::isfinite(t.score))
      throw Error(ErrorKind::kParse,
                  LineError(line_no, "bad score '" + score_text + "'"));
    out.push_back(t);
  }
  return out;
}

std::vector<TrialScore> ReadTrials(const std::filesystem::path &path) {
  auto is = Open(path);
  return ReadTrials(is);
}

std::vector<Transcript> ReadTranscripts(std::istream &is) {
  std::vector<Transcript> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto id_end = line.find_first_of(" \t", begin);
    Transcript t;
    t.utterance_id = line.substr(begin, id_end - begin);
    if (id_end != std::string::npos) {
      const auto text_begin = line.find_first_not_of(" \t", id_end);
      if (text_begin != std::string::npos) t.text = line.substr(text_begin);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Transcript> ReadTranscripts(const std::filesystem::path &path) {
  auto is = Open(path);
  return ReadTranscripts(is);
}

std::vector<FrameLabels> ReadFrameLabels(std::istream &is) {
  std::vector<FrameLabels> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ss(line);
    FrameLabels labels;
    if (!(ss >> labels.utterance_id)) continue;
    for (std::string tok; ss >> tok;) {
      if (tok != "0" && tok != "1")
        throw Error(ErrorKind::kParse,
                    LineError(line_no, "frame label '" + tok + "' not 0/1"));
      labels.speech.push_back(tok == "1");
    }
    out.push_back(std::move(labels));
  }
  return out;
}

std::vector<FrameLabels> ReadFrameLabels(const std::filesystem::path &path) {
  auto is = Open(path);
  return ReadFrameLabels(is);
}

}  // namespace privfeat
