// privfeat/mel.h

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

#ifndef PRIVFEAT_MEL_H_
#define PRIVFEAT_MEL_H_

#include <cstddef>
#include <string_view>
#include <vector>

#include "privfeat/matrix.h"
#include "privfeat/spectrum.h"

namespace privfeat {

/// m(f) = 2595 log10(1 + f / 700).
double HzToMel(double hz);
double MelToHz(double mel);

/// Triangular filters on the one-sided FFT grid. Row m rises linearly from
/// center m-1 to center m and falls to center m+1 (the outer edges are fmin
/// and fmax). Weights are unnormalized: the peak of every triangle is 1.
struct MelFilterbank {
  int n_mels = 0;
  std::size_t n_fft = 0;
  int sample_rate = 0;
  double fmin_hz = 0.0;
  double fmax_hz = 0.0;
  std::vector<double> center_hz;  // n_mels entries, strictly increasing
  RowMatrix weights;              // n_mels x (n_fft/2 + 1)
};

/// Throws kConfig for n_mels < 1 or a band outside [0, sample_rate/2], and
/// kResolution when some triangle is narrower than the bin spacing and
/// contains no FFT bin.
MelFilterbank BuildMelFilterbank(int n_mels, std::size_t n_fft, int sample_rate,
                                 double fmin_hz = 0.0, double fmax_hz = 8000.0);

enum class FeatureVariant { kStandard, kOlmega };

std::string_view FeatureVariantName(FeatureVariant variant);
FeatureVariant ParseFeatureVariant(std::string_view name);

struct FeatureMatrix {
  RowMatrix values;  // T x n_mels natural-log energies
  double frame_hop_s = 0.0;
  FeatureVariant variant = FeatureVariant::kStandard;

  std::size_t num_frames() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t num_mels() const { return static_cast<std::size_t>(values.cols()); }
};

inline constexpr double kDefaultLogFloor = 1e-10;

/// row_t = log(max(W * power_t, floor)). Throws kShape if the bank was built
/// for a different FFT grid.
FeatureMatrix LogMel(const Spectrogram &spec, const MelFilterbank &fb,
                     double floor = kDefaultLogFloor);

}  // namespace privfeat

#endif  // PRIVFEAT_MEL_H_
