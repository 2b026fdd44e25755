// privfeat/classification.cc

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

#include "privfeat/classification.h"

#include <algorithm>
#include <cmath>

#include "privfeat/error.h"

namespace privfeat {

ConfusionCounts CountConfusion(std::span<const bool> reference,
                               std::span<const bool> hypothesis) {
  ConfusionCounts c;
  const std::size_t n = std::min(reference.size(), hypothesis.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (reference[i])
      ++(hypothesis[i] ? c.tp : c.fn);
    else
      ++(hypothesis[i] ? c.fp : c.tn);
  }
  return c;
}

double ComputeMcc(const ConfusionCounts &c) {
  const double tp = static_cast<double>(c.tp), tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp), fn = static_cast<double>(c.fn);
  const double f1 = tp + fp, f2 = tp + fn, f3 = tn + fp, f4 = tn + fn;
  if (f1 == 0.0 || f2 == 0.0 || f3 == 0.0 || f4 == 0.0) return 0.0;
  const double mcc = (tp * tn - fp * fn) / std::sqrt(f1 * f2 * f3 * f4);
  return std::clamp(mcc, -1.0, 1.0);
}

double WeightedAverage(std::span<const double> values,
                       std::span<const double> weights) {
  if (values.size() != weights.size())
    throw Error(ErrorKind::kConfig, "values and weights differ in length");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(weights[i] >= 0.0))
      throw Error(ErrorKind::kConfig, "weights must be non-negative");
    num += weights[i] * values[i];
    den += weights[i];
  }
  if (!(den > 0.0)) throw Error(ErrorKind::kConfig, "weights sum to zero");
  return num / den;
}

}  // namespace privfeat
