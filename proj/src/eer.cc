// privfeat/eer.cc

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

#include "privfeat/eer.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "privfeat/error.h"

namespace privfeat {

EerResult ComputeEer(std::span<const TrialScore> trials) {
  std::vector<double> target, nontarget, thresholds;
  for (const TrialScore &t : trials) {
    if (!std::isfinite(t.score))
      throw Error(ErrorKind::kConfig, "non-finite trial score");
    (t.is_target ? target : nontarget).push_back(t.score);
    thresholds.push_back(t.score);
  }
  if (target.empty() || nontarget.empty())
    throw Error(ErrorKind::kClass,
                "EER needs at least one target and one non-target trial");
  std::sort(target.begin(), target.end());
  std::sort(nontarget.begin(), nontarget.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const double n_tgt = static_cast<double>(target.size());
  const double n_non = static_cast<double>(nontarget.size());
  auto rates = [&](double theta, double &fa, double &fr) {
    const auto below_tgt =
        std::lower_bound(target.begin(), target.end(), theta) - target.begin();
    const auto below_non =
        std::lower_bound(nontarget.begin(), nontarget.end(), theta) -
        nontarget.begin();
    fr = static_cast<double>(below_tgt) / n_tgt;
    fa = (n_non - static_cast<double>(below_non)) / n_non;
  };

  // At the lowest score fa = 1 and fr = 0; past the highest, fa = 0, fr = 1.
  double prev_fa = 1.0, prev_fr = 0.0, prev_theta = thresholds.front();
  for (std::size_t i = 1; i <= thresholds.size(); ++i) {
    double fa = 0.0, fr = 1.0;
    const bool past_end = i == thresholds.size();
    const double theta = past_end ? thresholds.back() : thresholds[i];
    if (!past_end) rates(theta, fa, fr);
    if (fa - fr <= 0.0) {
      const double d_prev = prev_fa - prev_fr, d_cur = fa - fr;
      const double w = d_prev / (d_prev - d_cur);
      EerResult out;
      out.eer = prev_fa + w * (fa - prev_fa);
      out.threshold = prev_theta + w * (theta - prev_theta);
      return out;
    }
    prev_fa = fa;
    prev_fr = fr;
    prev_theta = theta;
  }
  return {0.5, thresholds.back()};  // unreachable: the last point has d = -1
}

}  // namespace privfeat
