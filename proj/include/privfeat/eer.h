// privfeat/eer.h

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

#ifndef PRIVFEAT_EER_H_
#define PRIVFEAT_EER_H_

#include <span>

namespace privfeat {

/// One verification trial; higher scores mean "same speaker" is more likely.
struct TrialScore {
  bool is_target = false;
  double score = 0.0;
};

struct EerResult {
  double eer = 0.0;        // fraction in [0, 1]
  double threshold = 0.0;  // score at the interpolated crossing
};

/// Operating points are taken at every distinct score plus one above the
/// maximum, with false acceptance = fraction of non-targets scoring >= theta
/// and false rejection = fraction of targets scoring < theta. The EER is
/// read off the segment where the two rates cross, interpolating linearly
/// between its end points. Throws kClass if either class is missing and
/// kConfig for a non-finite score.
EerResult ComputeEer(std::span<const TrialScore> trials);

}  // namespace privfeat

#endif  // PRIVFEAT_EER_H_
