// privfeat/framing.cc

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

#include "privfeat/framing.h"

#include <cmath>
#include <numbers>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

std::vector<double> MakeWindow(WindowKind kind, std::size_t length) {
  std::vector<double> w(length, 1.0);
  if (kind == WindowKind::kRectangular) return w;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(length);
  for (std::size_t n = 0; n < length; ++n) {
    double c = std::cos(step * static_cast<double>(n));
    w[n] = kind == WindowKind::kHann ? 0.5 - 0.5 * c : 0.54 - 0.46 * c;
  }
  return w;
}

std::size_t MsToSamples(double ms, int sample_rate) {
  double exact = ms * sample_rate / 1000.0;
  double rounded = std::round(exact);
  if (!(rounded >= 1.0) || std::abs(exact - rounded) > 1e-9) {
    throw Error(ErrorKind::kConfig,
                std::to_string(ms) + " ms is not a whole number of samples at " +
                    std::to_string(sample_rate) + " Hz");
  }
  return static_cast<std::size_t>(rounded);
}

Frames FrameSignal(const AudioSignal &signal, const FrameConfig &cfg) {
  if (!(cfg.hop_ms > 0.0) || cfg.hop_ms > cfg.window_len_ms)
    throw Error(ErrorKind::kConfig, "hop must satisfy 0 < hop <= window");
  const std::size_t win = MsToSamples(cfg.window_len_ms, signal.sample_rate);
  const std::size_t hop = MsToSamples(cfg.hop_ms, signal.sample_rate);
  const std::size_t n = signal.samples.size();
  if (n < win) {
    throw Error(ErrorKind::kTooShort,
                std::to_string(n) + " samples is shorter than one window of " +
                    std::to_string(win));
  }

  std::size_t num_frames = (n - win) / hop + 1;
  if (cfg.pad_tail && (num_frames - 1) * hop + win < n) ++num_frames;

  const std::vector<double> taper = MakeWindow(cfg.window, win);
  Frames frames;
  frames.hop_samples = hop;
  frames.sample_rate = signal.sample_rate;
  frames.data = RowMatrix::Zero(static_cast<Eigen::Index>(num_frames),
                                static_cast<Eigen::Index>(win));
  for (std::size_t t = 0; t < num_frames; ++t) {
    const std::size_t start = t * hop;
    for (std::size_t k = 0; k < win && start + k < n; ++k)
      frames.data(t, k) = signal.samples[start + k] * taper[k];
  }
  return frames;
}

std::vector<double> OverlapAdd(const Frames &frames, std::size_t length) {
  std::vector<double> out(length, 0.0);
  for (std::size_t t = 0; t < frames.num_frames(); ++t) {
    const std::size_t start = t * frames.hop_samples;
    for (std::size_t k = 0; k < frames.frame_length() && start + k < length; ++k)
      out[start + k] += frames.data(t, k);
  }
  return out;
}

}  // namespace privfeat
