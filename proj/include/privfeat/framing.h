// privfeat/framing.h

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

#ifndef PRIVFEAT_FRAMING_H_
#define PRIVFEAT_FRAMING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "privfeat/audio.h"
#include "privfeat/matrix.h"

namespace privfeat {

enum class WindowKind { kRectangular, kHann, kHamming };

/// Framing parameters. Durations must map to whole sample counts at the
/// signal's rate.
struct FrameConfig {
  double window_len_ms = 25.0;
  double hop_ms = 10.0;
  WindowKind window = WindowKind::kHann;
  // Append one zero-padded frame when samples remain after the last full
  // frame. Off by default so the frame count is floor((N - win) / hop) + 1.
  bool pad_tail = false;

  /// 25 ms / 10 ms Hann: the standard filterbank front-end.
  static FrameConfig Standard() { return {25.0, 10.0, WindowKind::kHann, false}; }
  /// 25 ms / 12.5 ms Hann: the front-end ahead of PSD smoothing.
  static FrameConfig Olmega() { return {25.0, 12.5, WindowKind::kHann, false}; }
};

/// Periodic window of the given length (Hann and Hamming satisfy COLA at
/// hop = len/2).
std::vector<double> MakeWindow(WindowKind kind, std::size_t length);

/// Converts a duration to samples; throws kConfig unless the product is a
/// positive whole number.
std::size_t MsToSamples(double ms, int sample_rate);

struct Frames {
  RowMatrix data;  // T x window length, already tapered
  std::size_t hop_samples = 0;
  int sample_rate = kPipelineSampleRate;

  std::size_t num_frames() const { return static_cast<std::size_t>(data.rows()); }
  std::size_t frame_length() const { return static_cast<std::size_t>(data.cols()); }
  double hop_seconds() const {
    return static_cast<double>(hop_samples) / sample_rate;
  }
};

/// Frame i covers samples [i*hop, i*hop + win) multiplied by the taper.
/// Throws kTooShort if the signal is shorter than one window, kConfig for
/// an invalid hop/window pair.
Frames FrameSignal(const AudioSignal &signal, const FrameConfig &cfg);

/// Plain overlap-add of frame rows at frames.hop_samples into a buffer of
/// `length` samples (rows running past the end are truncated).
std::vector<double> OverlapAdd(const Frames &frames, std::size_t length);

}  // namespace privfeat

#endif  // PRIVFEAT_FRAMING_H_
