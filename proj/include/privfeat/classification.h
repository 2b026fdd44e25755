// privfeat/classification.h

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

#ifndef PRIVFEAT_CLASSIFICATION_H_
#define PRIVFEAT_CLASSIFICATION_H_

#include <cstdint>
#include <span>

namespace privfeat {

/// Binary confusion counts (speech = positive for frame-level VAD).
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  ConfusionCounts &operator+=(const ConfusionCounts &o) {
    tp += o.tp;
    tn += o.tn;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
};

/// Counts over aligned label sequences; the shorter length is used.
ConfusionCounts CountConfusion(std::span<const bool> reference,
                               std::span<const bool> hypothesis);

/// Matthews correlation coefficient in [-1, 1]. Returns 0 when any of
/// (tp+fp), (tp+fn), (tn+fp), (tn+fn) is zero.
double ComputeMcc(const ConfusionCounts &c);

/// sum_i w_i v_i / sum_i w_i. Throws kConfig on a length mismatch, a
/// negative weight, or a zero weight sum.
double WeightedAverage(std::span<const double> values,
                       std::span<const double> weights);

}  // namespace privfeat

#endif  // PRIVFEAT_CLASSIFICATION_H_
