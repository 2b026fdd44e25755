// privfeat/der.h

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

#ifndef PRIVFEAT_DER_H_
#define PRIVFEAT_DER_H_

#include <string>
#include <vector>

#include "privfeat/annotation.h"

namespace privfeat {

struct DerBreakdown {
  double fa_s = 0.0;
  double miss_s = 0.0;
  double error_s = 0.0;
  double total_s = 0.0;  // scored reference speaker time
  double der = 0.0;

  /// Adds component seconds and recomputes the rate (files are pooled by
  /// time, not averaged).
  DerBreakdown &operator+=(const DerBreakdown &other);
};

struct DerOptions {
  double collar_s = 0.25;       // excluded on each side of every ref boundary
  bool include_overlap = true;  // score regions with >1 reference speaker
};

/// Half-open time interval [start, end).
struct Interval {
  double start = 0.0;
  double end = 0.0;
};

/// Regions removed from scoring: +-collar around every reference boundary
/// and, without include_overlap, reference overlap. Sorted and merged.
std::vector<Interval> ExcludedRegions(const SegmentAnnotation &reference,
                                      const DerOptions &opts);

/// Reference speaker time left after exclusion (the DER denominator).
double ScoredReferenceTime(const SegmentAnnotation &reference,
                           const DerOptions &opts);

/// The timeline is cut at every segment and exclusion boundary. In each
/// scored piece with r reference and h hypothesis speakers, MISS grows by
/// max(0, r - h), FA by max(0, h - r) and ERROR by min(r, h) minus the
/// speakers matched under one global reference-to-hypothesis mapping; the
/// mapping maximizes matched time (optimal assignment). Throws kUndefined
/// when no reference speech remains after exclusion.
DerBreakdown ComputeDer(const SegmentAnnotation &reference,
                        const SegmentAnnotation &hypothesis,
                        const DerOptions &opts = {});

}  // namespace privfeat

#endif  // PRIVFEAT_DER_H_
