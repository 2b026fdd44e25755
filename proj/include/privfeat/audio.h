// privfeat/audio.h

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

#ifndef PRIVFEAT_AUDIO_H_
#define PRIVFEAT_AUDIO_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace privfeat {

/// Every pipeline entry point operates at this rate.
inline constexpr int kPipelineSampleRate = 16000;

/// Mono PCM audio. Samples are nominally in [-1, 1].
struct AudioSignal {
  std::vector<double> samples;
  int sample_rate = kPipelineSampleRate;

  std::size_t size() const { return samples.size(); }
  double DurationSeconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

/// Reads a RIFF/WAVE file (PCM 8/16/24/32-bit or IEEE float 32/64-bit,
/// any channel count). Channels are averaged to mono and integer PCM is
/// scaled by 2^(bits-1). The sample rate is taken from the header as-is;
/// call RequirePipelineRate() at the point where 16 kHz matters.
AudioSignal ReadWav(const std::filesystem::path &path);
AudioSignal ReadWav(std::istream &is);

/// Writes 16-bit little-endian mono PCM. Samples are clipped to [-1, 1).
void WriteWav(const AudioSignal &signal, const std::filesystem::path &path);
void WriteWav(const AudioSignal &signal, std::ostream &os);

/// Throws kRate unless signal.sample_rate == kPipelineSampleRate, and
/// kFormat if any sample is not finite.
void RequirePipelineRate(const AudioSignal &signal);

}  // namespace privfeat

#endif  // PRIVFEAT_AUDIO_H_
