// privfeat/annotation.h

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

#ifndef PRIVFEAT_ANNOTATION_H_
#define PRIVFEAT_ANNOTATION_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace privfeat {

struct Segment {
  std::string speaker;
  double start_s = 0.0;
  double end_s = 0.0;

  double Duration() const { return end_s - start_s; }
  bool operator==(const Segment &) const = default;
};

/// Speaker turns of one recording. Segments may overlap.
struct SegmentAnnotation {
  std::string recording_id;
  std::vector<Segment> segments;

  /// Throws kConfig unless every segment has finite 0 <= start < end.
  void Validate() const;
  /// Sum of segment durations (overlapping speech counted per speaker).
  double TotalSpeech() const;
};

// RTTM SPEAKER lines:
//   SPEAKER <file> 1 <onset> <duration> <NA> <NA> <label> <NA> <NA>
// Other record types and ";;" comments are skipped. Lines are grouped by
// <file> in order of first appearance. Malformed SPEAKER lines and
// non-positive durations throw kParse naming the line number.
std::vector<SegmentAnnotation> ReadRttm(std::istream &is);
std::vector<SegmentAnnotation> ReadRttm(const std::filesystem::path &path);

/// Writes onsets and durations with millisecond precision. An empty
/// recording id is written as "unknown".
void WriteRttm(const SegmentAnnotation &annotation, std::ostream &os);
void WriteRttm(const SegmentAnnotation &annotation,
               const std::filesystem::path &path);

}  // namespace privfeat

#endif  // PRIVFEAT_ANNOTATION_H_
