// privfeat/score-io.h

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

#ifndef PRIVFEAT_SCORE_IO_H_
#define PRIVFEAT_SCORE_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "privfeat/eer.h"

namespace privfeat {

/// Lines of `<target|nontarget> <score>`; blank lines and '#' comments are
/// skipped. Throws kParse with the line number otherwise.
std::vector<TrialScore> ReadTrials(std::istream &is);
std::vector<TrialScore> ReadTrials(const std::filesystem::path &path);

struct Transcript {
  std::string utterance_id;
  std::string text;
};

/// Lines of `<utt-id>\t<text>` (the first run of whitespace separates the
/// id from the text; empty text is allowed).
std::vector<Transcript> ReadTranscripts(std::istream &is);
std::vector<Transcript> ReadTranscripts(const std::filesystem::path &path);

struct FrameLabels {
  std::string utterance_id;
  std::vector<bool> speech;
};

/// Lines of `<utt-id> <0|1> <0|1> ...` with one label per frame.
std::vector<FrameLabels> ReadFrameLabels(std::istream &is);
std::vector<FrameLabels> ReadFrameLabels(const std::filesystem::path &path);

}  // namespace privfeat

#endif  // PRIVFEAT_SCORE_IO_H_
