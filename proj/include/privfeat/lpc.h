// privfeat/lpc.h

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

#ifndef PRIVFEAT_LPC_H_
#define PRIVFEAT_LPC_H_

#include <span>
#include <vector>

namespace privfeat {

/// All-pole model with predictor polynomial A(z) = 1 - sum_k a_k z^-k.
/// `coefficients` holds a_1..a_p; gain^2 is the final prediction-error
/// energy of the recursion.
struct LpcModel {
  std::vector<double> coefficients;
  double gain = 0.0;

  int order() const { return static_cast<int>(coefficients.size()); }
};

struct LevinsonResult {
  std::vector<double> coefficients;  // a_1..a_p
  std::vector<double> reflection;    // k_1..k_p
  double error = 0.0;                // final prediction-error energy
};

/// r[0..max_lag] of the (already windowed) frame, unnormalized.
std::vector<double> Autocorrelation(std::span<const double> frame, int max_lag);

/// Solves the Toeplitz normal equations R a = r[1..p]. Throws kSilentFrame
/// when r[0] == 0 and kDegenerateFrame when a reflection coefficient reaches
/// magnitude 1 or the error energy stops being positive.
LevinsonResult LevinsonDurbin(std::span<const double> autocorr, int order);

/// Autocorrelation-method LPC of a windowed frame. r[0] is inflated by a
/// factor (1 + 1e-9) before the recursion so that perfectly predictable
/// frames (constants, pure tones) stay strictly positive definite.
LevinsonResult LpcAnalyzeDetailed(std::span<const double> frame, int order);
LpcModel LpcAnalyze(std::span<const double> frame, int order);

/// e_n = x_n - sum_k a_k x_{n-k}. `history` holds the previous inputs, most
/// recent first, and is updated in place; it is resized (zero-filled) to the
/// model order if its size differs.
std::vector<double> InverseFilter(std::span<const double> x,
                                  std::span<const double> a,
                                  std::vector<double> &history);

/// y_n = e_n + sum_k a_k y_{n-k}. `history` holds previous outputs, most
/// recent first, with the same resizing rule as InverseFilter.
std::vector<double> SynthesisFilter(std::span<const double> e,
                                    std::span<const double> a,
                                    std::vector<double> &history);

}  // namespace privfeat

#endif  // PRIVFEAT_LPC_H_
