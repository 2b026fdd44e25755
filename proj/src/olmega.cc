// privfeat/olmega.cc

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

#include "privfeat/olmega.h"

#include <cmath>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

std::size_t OlmegaConfig::SubsampleFactor() const {
  if (!(hop_ms > 0.0) || !(tau_ms > hop_ms))
    throw Error(ErrorKind::kConfig, "olMEGA requires tau > hop > 0");
  const double ratio = tau_ms / hop_ms;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9)
    throw Error(ErrorKind::kConfig, "tau / hop = " + std::to_string(ratio) +
                                        " is not a whole number");
  return static_cast<std::size_t>(rounded);
}

double SmoothingCoefficient(double hop_s, double tau_ms) {
  if (!(tau_ms > 0.0))
    throw Error(ErrorKind::kConfig, "smoothing time constant must be > 0");
  if (!(hop_s > 0.0)) throw Error(ErrorKind::kConfig, "frame hop must be > 0");
  return std::exp(-hop_s / (tau_ms / 1000.0));
}

Spectrogram SmoothPsd(const Spectrogram &spec, double tau_ms,
                      SmoothingInit init) {
  const double a = SmoothingCoefficient(spec.frame_hop_s, tau_ms);
  Spectrogram out = spec;
  if (spec.num_frames() == 0) return out;
  if (init == SmoothingInit::kZero) out.power.row(0) *= (1.0 - a);
  for (Eigen::Index t = 1; t < out.power.rows(); ++t)
    out.power.row(t) = a * out.power.row(t - 1) + (1.0 - a) * spec.power.row(t);
  return out;
}

Spectrogram SubsampleFrames(const Spectrogram &spec, std::size_t factor) {
  if (factor < 1) throw Error(ErrorKind::kConfig, "subsample factor must be >= 1");
  const std::size_t kept = (spec.num_frames() + factor - 1) / factor;
  Spectrogram out = spec;
  out.power.resize(static_cast<Eigen::Index>(kept), spec.power.cols());
  for (std::size_t i = 0; i < kept; ++i)
    out.power.row(static_cast<Eigen::Index>(i)) =
        spec.power.row(static_cast<Eigen::Index>(i * factor));
  out.frame_hop_s = spec.frame_hop_s * static_cast<double>(factor);
  return out;
}

Spectrogram RepeatUpsample(const Spectrogram &spec, std::size_t factor) {
  if (factor < 1) throw Error(ErrorKind::kConfig, "repeat factor must be >= 1");
  Spectrogram out = spec;
  out.power.resize(static_cast<Eigen::Index>(spec.num_frames() * factor),
                   spec.power.cols());
  for (std::size_t t = 0; t < spec.num_frames(); ++t)
    for (std::size_t r = 0; r < factor; ++r)
      out.power.row(static_cast<Eigen::Index>(t * factor + r)) =
          spec.power.row(static_cast<Eigen::Index>(t));
  out.frame_hop_s = spec.frame_hop_s / static_cast<double>(factor);
  return out;
}

FeatureMatrix OlmegaFeatures(const AudioSignal &signal, const OlmegaConfig &cfg,
                             const MelFilterbank &fb) {
  RequirePipelineRate(signal);
  const std::size_t factor = cfg.SubsampleFactor();
  const Frames frames = FrameSignal(signal, cfg.Framing());
  Spectrogram spec = PowerSpectrum(frames, NextPowerOfTwo(frames.frame_length()));
  spec = SmoothPsd(spec, cfg.tau_ms);
  spec = RepeatUpsample(SubsampleFrames(spec, factor), factor);
  FeatureMatrix out = LogMel(spec, fb);
  out.variant = FeatureVariant::kOlmega;
  return out;
}

FeatureMatrix StandardFeatures(const AudioSignal &signal,
                               const MelFilterbank &fb, const FrameConfig &cfg) {
  RequirePipelineRate(signal);
  const Frames frames = FrameSignal(signal, cfg);
  return LogMel(PowerSpectrum(frames, NextPowerOfTwo(frames.frame_length())), fb);
}

}  // namespace privfeat
