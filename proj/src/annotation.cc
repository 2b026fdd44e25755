// privfeat/annotation.cc

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

#include "privfeat/annotation.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "privfeat/error.h"

namespace privfeat {

namespace {

double ParseNumber(const std::string &field, std::size_t line_no,
                   const char *what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != field.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                       ": bad " + what + " '" + field + "'");
  }
  return value;
}

}  // namespace

void SegmentAnnotation::Validate() const {
  for (const Segment &s : segments) {
    if (!std::isfinite(s.start_s) || !std::isfinite(s.end_s) ||
        s.start_s < 0.0 || !(s.end_s > s.start_s)) {
      throw Error(ErrorKind::kConfig,
                  "invalid segment for speaker '" + s.speaker + "' [" +
                      std::to_string(s.start_s) + ", " +
                      std::to_string(s.end_s) + ")");
    }
  }
}

double SegmentAnnotation::TotalSpeech() const {
  double total = 0.0;
  for (const Segment &s : segments) total += s.Duration();
  return total;
}

std::vector<SegmentAnnotation> ReadRttm(std::istream &is) {
  std::vector<SegmentAnnotation> out;
  std::map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> fields;
    for (std::string f; ss >> f;) fields.push_back(f);
    if (fields.empty() || fields[0].rfind(";;", 0) == 0) continue;
    if (fields[0] != "SPEAKER") continue;
    if (fields.size() < 8) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                         ": SPEAKER record needs at least 8 "
                                         "fields");
    }
    const double onset = ParseNumber(fields[3], line_no, "onset");
    const double duration = ParseNumber(fields[4], line_no, "duration");
    if (onset < 0.0)
      throw Error(ErrorKind::kParse,
                  "line " + std::to_string(line_no) + ": negative onset");
    if (!(duration > 0.0))
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) +
                                         ": non-positive duration");
    auto [it, inserted] = index.try_emplace(fields[1], out.size());
    if (inserted) out.push_back({fields[1], {}});
    out[it->second].segments.push_back({fields[7], onset, onset + duration});
  }
  return out;
}

std::vector<SegmentAnnotation> ReadRttm(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  try {
    return ReadRttm(is);
  } catch (const Error &e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void WriteRttm(const SegmentAnnotation &annotation, std::ostream &os) {
  const std::string id =
      annotation.recording_id.empty() ? "unknown" : annotation.recording_id;
  char buf[64];
  for (const Segment &s : annotation.segments) {
    std::snprintf(buf, sizeof(buf), "%.3f %.3f", s.start_s, s.Duration());
    os << "SPEAKER " << id << " 1 " << buf << " <NA> <NA> " << s.speaker
       << " <NA> <NA>\n";
  }
}

void WriteRttm(const SegmentAnnotation &annotation,
               const std::filesystem::path &path) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  WriteRttm(annotation, os);
}

}  // namespace privfeat
