// privfeat/tests/support/fixtures.h

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

#ifndef PRIVFEAT_TESTS_SUPPORT_FIXTURES_H_
#define PRIVFEAT_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "privfeat/audio.h"

namespace privfeat::testing {

// Voiced/unvoiced speech-like signal at 16 kHz: a jittered glottal pulse
// train with a drifting f0, shaped by three formant resonators that move
// between vowel targets, under a syllabic envelope with short pauses.
AudioSignal SyntheticSpeech(double seconds, std::uint64_t seed);

// x_t = sum_k a_k x_{t-k} + w_t, w ~ N(0, noise_std^2), after a burn-in.
std::vector<double> ArProcess(const std::vector<double> &a, std::size_t n,
                              std::uint64_t seed, double noise_std = 1.0);

std::vector<double> WhiteNoise(std::size_t n, std::uint64_t seed,
                               double std = 1.0);

AudioSignal Tone(double hz, double amplitude, std::size_t n,
                 double phase = 0.0);

// Carrier at `hz` with a raised-cosine amplitude modulation at `mod_hz`.
AudioSignal AmTone(double hz, double mod_hz, double depth, std::size_t n);

AudioSignal Silence(std::size_t n);
AudioSignal Concat(const std::vector<AudioSignal> &parts);

double SnrDb(const std::vector<double> &reference,
             const std::vector<double> &test);
double EnergyDb(const std::vector<double> &x);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag);
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;
  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

}  // namespace privfeat::testing

#endif  // PRIVFEAT_TESTS_SUPPORT_FIXTURES_H_
