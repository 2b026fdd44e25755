// privfeat/mcadams.cc

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

#include "privfeat/mcadams.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "privfeat/error.h"
#include "privfeat/framing.h"
#include "privfeat/logging.h"
#include "privfeat/lpc.h"
#include "privfeat/poles.h"

namespace privfeat {

namespace {

constexpr double kStableRadius = 0.999;

void PassThroughState(std::span<const double> frame, FilterState *state,
                      int order) {
  if (!state) return;
  auto &in = state->input_history;
  in.assign(static_cast<std::size_t>(order), 0.0);
  for (std::size_t k = 0; k < in.size() && k < frame.size(); ++k)
    in[k] = frame[frame.size() - 1 - k];
  state->output_history = in;
}

}  // namespace

void McAdamsConfig::Validate(int sample_rate) const {
  if (fixed_alpha) {
    if (!(*fixed_alpha > 0.0))
      throw Error(ErrorKind::kConfig, "fixed alpha must be > 0");
  } else if (!(alpha_range.low > 0.0) ||
             !(alpha_range.low < alpha_range.high)) {
    throw Error(ErrorKind::kConfig,
                "alpha range must satisfy 0 < low < high");
  }
  const std::size_t win = MsToSamples(frame_len_ms, sample_rate);
  MsToSamples(frame_hop_ms, sample_rate);
  if (frame_hop_ms > frame_len_ms)
    throw Error(ErrorKind::kConfig, "hop longer than frame");
  if (lpc_order < 2 || static_cast<std::size_t>(lpc_order) >= win)
    throw Error(ErrorKind::kConfig,
                "LPC order must lie in [2, frame length)");
}

FrameResult AnonymizeFrame(std::span<const double> frame, int order,
                           double alpha, FilterState *state) {
  FrameResult result;
  LpcModel model;
  try {
    model = LpcAnalyze(frame, order);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kSilentFrame &&
        e.kind() != ErrorKind::kDegenerateFrame)
      throw;
    result.samples.assign(frame.begin(), frame.end());
    result.outcome = e.kind() == ErrorKind::kSilentFrame
                         ? FrameOutcome::kSilent
                         : FrameOutcome::kDegenerate;
    PassThroughState(frame, state, order);
    return result;
  }

  std::vector<double> shifted_coeffs;
  try {
    ShiftReport report;
    PoleSet shifted = ShiftPoles(FindPoles(model.coefficients), alpha, &report);
    result.clamped_angles = report.clamped;
    const double max_radius = shifted.MaxRadius();
    if (max_radius >= 1.0) {
      shifted = ScaleRadii(shifted, kStableRadius / max_radius);
      result.outcome = FrameOutcome::kStabilized;
    }
    shifted_coeffs = RebuildFromPoles(shifted);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kNumeric && e.kind() != ErrorKind::kSymmetry)
      throw;
    result.samples.assign(frame.begin(), frame.end());
    result.outcome = FrameOutcome::kNumeric;
    PassThroughState(frame, state, order);
    return result;
  }

  FilterState local;
  FilterState &s = state ? *state : local;
  const std::vector<double> residual =
      InverseFilter(frame, model.coefficients, s.input_history);
  result.samples = SynthesisFilter(residual, shifted_coeffs, s.output_history);
  return result;
}

double DrawAlpha(const AlphaRange &range, Rng &rng) {
  return rng.Uniform(range.low, range.high);
}

AnonymizedUtterance AnonymizeWithAlpha(const AudioSignal &signal,
                                       const McAdamsConfig &cfg, double alpha) {
  RequirePipelineRate(signal);
  cfg.Validate(signal.sample_rate);
  if (!(alpha > 0.0))
    throw Error(ErrorKind::kConfig, "McAdams coefficient must be > 0");

  const std::size_t win = MsToSamples(cfg.frame_len_ms, signal.sample_rate);
  const std::size_t hop = MsToSamples(cfg.frame_hop_ms, signal.sample_rate);
  const std::size_t n = signal.size();

  AnonymizedUtterance out;
  out.alpha_used = alpha;
  out.signal.sample_rate = signal.sample_rate;
  if (n == 0) return out;

  // Leading pad so the first sample sees as many frames as any other.
  const std::size_t lead = win - hop;
  const std::size_t num_frames = (lead + n + hop - 1) / hop;
  std::vector<double> padded(lead + (num_frames - 1) * hop + win, 0.0);
  std::copy(signal.samples.begin(), signal.samples.end(),
            padded.begin() + static_cast<std::ptrdiff_t>(lead));

  const std::vector<double> window = MakeWindow(WindowKind::kHann, win);
  const std::size_t channels = win % hop == 0 ? win / hop : 0;
  std::vector<FilterState> states(channels);

  std::vector<double> acc(padded.size(), 0.0), weight(padded.size(), 0.0);
  std::vector<double> frame(win);
  for (std::size_t t = 0; t < num_frames; ++t) {
    const std::size_t start = t * hop;
    for (std::size_t k = 0; k < win; ++k)
      frame[k] = padded[start + k] * window[k];
    FilterState *state = channels ? &states[t % channels] : nullptr;
    FrameResult fr = AnonymizeFrame(frame, cfg.lpc_order, alpha, state);
    ++out.stats.frames;
    out.stats.clamped_angles += fr.clamped_angles;
    if (fr.outcome == FrameOutcome::kStabilized) ++out.stats.stabilized;
    if (fr.outcome == FrameOutcome::kDegenerate ||
        fr.outcome == FrameOutcome::kNumeric)
      ++out.stats.passthrough;
    for (std::size_t k = 0; k < win; ++k) {
      acc[start + k] += fr.samples[k];
      weight[start + k] += window[k];
    }
  }

  out.signal.samples.resize(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weight[lead + i];
    const double y = w > 1e-8 ? acc[lead + i] / w : 0.0;
    out.signal.samples[i] = y;
    peak = std::max(peak, std::abs(y));
  }
  if (peak > 1.0) {
    for (double &y : out.signal.samples) y /= peak;
    out.stats.peak_normalized = true;
    LogWarning("anonymized output peaked at " + std::to_string(peak) +
               "; peak-normalized to 1");
  }
  if (out.stats.stabilized > 0)
    LogWarning(std::to_string(out.stats.stabilized) + " of " +
               std::to_string(out.stats.frames) +
               " frames needed pole-radius stabilization");
  if (out.stats.clamped_angles > 0)
    LogWarning(std::to_string(out.stats.clamped_angles) +
               " shifted pole angles were clamped");
  return out;
}

AnonymizedUtterance AnonymizeUtterance(const AudioSignal &signal,
                                       const McAdamsConfig &cfg, Rng &rng) {
  const double alpha =
      cfg.fixed_alpha ? *cfg.fixed_alpha : DrawAlpha(cfg.alpha_range, rng);
  return AnonymizeWithAlpha(signal, cfg, alpha);
}

AnonymizedUtterance AnonymizeUtterance(const AudioSignal &signal,
                                       const McAdamsConfig &cfg) {
  Rng rng(cfg.seed);
  return AnonymizeUtterance(signal, cfg, rng);
}

}  // namespace privfeat
