// privfeat/spectrum.h

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

#ifndef PRIVFEAT_SPECTRUM_H_
#define PRIVFEAT_SPECTRUM_H_

#include <cstddef>

#include "privfeat/framing.h"
#include "privfeat/matrix.h"

namespace privfeat {

/// One-sided power spectra, one row per frame, n_fft/2 + 1 columns.
struct Spectrogram {
  RowMatrix power;
  double frame_hop_s = 0.0;
  double bin_hz = 0.0;
  std::size_t n_fft = 0;

  std::size_t num_frames() const { return static_cast<std::size_t>(power.rows()); }
  std::size_t num_bins() const { return static_cast<std::size_t>(power.cols()); }
  int sample_rate() const { return static_cast<int>(bin_hz * n_fft + 0.5); }
};

/// Smallest power of two >= n (n >= 1).
std::size_t NextPowerOfTwo(std::size_t n);

/// |DFT(frame zero-padded to n_fft)|^2 for bins 0..n_fft/2. No scaling.
/// Throws kConfig if n_fft is not a power of two or is below the frame
/// length.
Spectrogram PowerSpectrum(const Frames &frames, std::size_t n_fft);

}  // namespace privfeat

#endif  // PRIVFEAT_SPECTRUM_H_
