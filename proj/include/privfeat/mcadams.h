// privfeat/mcadams.h

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

#ifndef PRIVFEAT_MCADAMS_H_
#define PRIVFEAT_MCADAMS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "privfeat/audio.h"
#include "privfeat/random.h"

namespace privfeat {

struct AlphaRange {
  double low = 0.5;
  double high = 0.9;
};

struct McAdamsConfig {
  AlphaRange alpha_range;
  int lpc_order = 20;
  double frame_len_ms = 25.0;
  double frame_hop_ms = 12.5;
  std::uint64_t seed = 0;
  // Debug/test mode: bypasses the draw and uses this coefficient.
  std::optional<double> fixed_alpha;

  /// Throws kConfig on an empty alpha range, an order outside
  /// [2, frame length), or a framing that is not a whole sample count.
  void Validate(int sample_rate) const;
};

enum class FrameOutcome {
  kShifted,     // normal path
  kStabilized,  // shifted filter rescaled to radius 0.999
  kSilent,      // all-zero frame, passed through
  kDegenerate,  // Levinson breakdown, passed through
  kNumeric,     // root finding failed, passed through
};

/// Filter memories for one overlap-add channel. With 50% overlap the even
/// and odd frames each tile the signal without gaps, so each channel carries
/// its inverse- and synthesis-filter state from one frame to the next.
struct FilterState {
  std::vector<double> input_history;
  std::vector<double> output_history;
};

struct FrameResult {
  std::vector<double> samples;
  FrameOutcome outcome = FrameOutcome::kShifted;
  int clamped_angles = 0;
};

/// Residual through the analysis filter A(z), then through 1/A'(z) where A'
/// has every complex pole angle raised to `alpha`. `state` may be null, in
/// which case both filters start from rest. Silent and degenerate frames
/// come back unchanged.
FrameResult AnonymizeFrame(std::span<const double> frame, int order,
                           double alpha, FilterState *state = nullptr);

struct AnonymizationStats {
  int frames = 0;
  int stabilized = 0;
  int passthrough = 0;
  int clamped_angles = 0;
  bool peak_normalized = false;
};

struct AnonymizedUtterance {
  AudioSignal signal;
  double alpha_used = 0.0;
  AnonymizationStats stats;
};

/// Uniform draw from [low, high).
double DrawAlpha(const AlphaRange &range, Rng &rng);

/// Processes the whole signal with one coefficient: Hann analysis frames,
/// per-frame pole shifting and a window-normalized overlap-add. The output
/// has the input's length and is peak-normalized only if it would clip.
AnonymizedUtterance AnonymizeWithAlpha(const AudioSignal &signal,
                                       const McAdamsConfig &cfg, double alpha);

/// Draws alpha from cfg.alpha_range with `rng` (or uses cfg.fixed_alpha)
/// and calls AnonymizeWithAlpha.
AnonymizedUtterance AnonymizeUtterance(const AudioSignal &signal,
                                       const McAdamsConfig &cfg, Rng &rng);
/// Same, seeding the generator from cfg.seed.
AnonymizedUtterance AnonymizeUtterance(const AudioSignal &signal,
                                       const McAdamsConfig &cfg);

}  // namespace privfeat

#endif  // PRIVFEAT_MCADAMS_H_
