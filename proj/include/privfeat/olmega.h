// privfeat/olmega.h

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

#ifndef PRIVFEAT_OLMEGA_H_
#define PRIVFEAT_OLMEGA_H_

#include <cstddef>

#include "privfeat/audio.h"
#include "privfeat/framing.h"
#include "privfeat/mel.h"
#include "privfeat/spectrum.h"

namespace privfeat {

/// Parameters of the smoothed-and-subsampled PSD front-end. The subsampling
/// factor is tau / hop and must be a whole number.
struct OlmegaConfig {
  double window_len_ms = 25.0;
  double hop_ms = 12.5;
  double tau_ms = 125.0;

  /// round(tau / hop); throws kConfig unless tau > hop and the ratio is
  /// integral.
  std::size_t SubsampleFactor() const;
  FrameConfig Framing() const {
    return {window_len_ms, hop_ms, WindowKind::kHann, false};
  }
};

/// How the recursive smoother is started.
enum class SmoothingInit {
  kFirstFrame,  // y_0 = x_0
  kZero,        // y_{-1} = 0, so y_0 = (1 - a) x_0; impulse-response tests
};

/// a = exp(-hop / tau).
double SmoothingCoefficient(double hop_s, double tau_ms);

/// Per bin: y_t = a y_{t-1} + (1 - a) x_t.
Spectrogram SmoothPsd(const Spectrogram &spec, double tau_ms,
                      SmoothingInit init = SmoothingInit::kFirstFrame);

/// Keeps frames 0, factor, 2*factor, ...; the hop grows by `factor`.
Spectrogram SubsampleFrames(const Spectrogram &spec, std::size_t factor);

/// Repeats each frame `factor` times; the hop shrinks by `factor`.
Spectrogram RepeatUpsample(const Spectrogram &spec, std::size_t factor);

/// frame -> PSD -> smooth -> subsample -> repeat -> log Mel. The output has
/// ceil(T / factor) * factor rows for T analysis frames and the hop of the
/// analysis framing. The filterbank must be built for NextPowerOfTwo(window).
FeatureMatrix OlmegaFeatures(const AudioSignal &signal, const OlmegaConfig &cfg,
                             const MelFilterbank &fb);

/// frame -> PSD -> log Mel with no temporal processing.
FeatureMatrix StandardFeatures(const AudioSignal &signal,
                               const MelFilterbank &fb,
                               const FrameConfig &cfg = FrameConfig::Standard());

}  // namespace privfeat

#endif  // PRIVFEAT_OLMEGA_H_
