// privfeat/tests/support/fixtures.cc

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

#include "fixtures.h"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <unistd.h>

namespace privfeat::testing {

namespace {

constexpr double kPi = std::numbers::pi;

struct Resonator {
  double b1 = 0.0, b2 = 0.0, gain = 1.0, y1 = 0.0, y2 = 0.0;
  void Set(double hz, double bw_hz, int sr) {
    const double r = std::exp(-kPi * bw_hz / sr);
    b1 = 2.0 * r * std::cos(2.0 * kPi * hz / sr);
    b2 = -r * r;
    gain = 1.0 - b1 - b2;  // unit gain at DC
  }
  double Step(double x) {
    const double y = gain * x + b1 * y1 + b2 * y2;
    y2 = y1;
    y1 = y;
    return y;
  }
};

struct Vowel {
  double f1, f2, f3;
};

}  // namespace

AudioSignal SyntheticSpeech(double seconds, std::uint64_t seed) {
  constexpr int sr = kPipelineSampleRate;
  const std::size_t n = static_cast<std::size_t>(seconds * sr);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g(0.0, 1.0);

  static const Vowel kVowels[] = {{730, 1090, 2440}, {270, 2290, 3010},
                                  {300, 870, 2240},  {530, 1840, 2480},
                                  {660, 1720, 2410}, {490, 1350, 1690}};
  Resonator res[3];
  Vowel cur = kVowels[0], target = kVowels[1];
  double f0 = 120.0, phase = 0.0;
  const double syllable_s = 0.22;
  std::size_t next_target = 0;

  AudioSignal out;
  out.samples.resize(n);
  double lp = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sr;
    if (i == next_target) {
      target = kVowels[static_cast<std::size_t>(u(gen) * 6) % 6];
      next_target += static_cast<std::size_t>(syllable_s * sr);
    }
    // Glide the formants toward the current target.
    cur.f1 += (target.f1 - cur.f1) * 0.002;
    cur.f2 += (target.f2 - cur.f2) * 0.002;
    cur.f3 += (target.f3 - cur.f3) * 0.002;
    if (i % 16 == 0) {
      res[0].Set(cur.f1, 80, sr);
      res[1].Set(cur.f2, 110, sr);
      res[2].Set(cur.f3, 160, sr);
    }
    f0 = 120.0 + 20.0 * std::sin(2.0 * kPi * 0.7 * t) + 2.0 * g(gen) * 0.1;
    phase += f0 / sr;
    double src = 0.0;
    if (phase >= 1.0) {
      phase -= 1.0;
      src = 1.0 + 0.05 * g(gen);
    }
    // Mild spectral tilt on the pulses plus aspiration noise.
    lp = 0.9 * lp + src;
    const double excitation = 0.1 * lp + 0.02 * g(gen);
    double y = excitation;
    for (Resonator &r : res) y = r.Step(y);
    // Syllabic envelope with a pause after every fourth syllable.
    const double syl = std::fmod(t, syllable_s) / syllable_s;
    const bool pause = static_cast<int>(t / syllable_s) % 4 == 3;
    const double env = pause ? 0.02 : std::sin(kPi * syl);
    out.samples[i] = y * env;
  }
  double peak = 0.0;
  for (double x : out.samples) peak = std::max(peak, std::abs(x));
  if (peak > 0.0)
    for (double &x : out.samples) x *= 0.5 / peak;
  return out;
}

std::vector<double> ArProcess(const std::vector<double> &a, std::size_t n,
                              std::uint64_t seed, double noise_std) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g(0.0, noise_std);
  const std::size_t burn = 1000;
  std::vector<double> x(n + burn, 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double v = g(gen);
    for (std::size_t k = 0; k < a.size() && k < t; ++k) v += a[k] * x[t - 1 - k];
    x[t] = v;
  }
  return {x.begin() + burn, x.end()};
}

std::vector<double> WhiteNoise(std::size_t n, std::uint64_t seed, double std) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g(0.0, std);
  std::vector<double> x(n);
  for (double &v : x) v = g(gen);
  return x;
}

AudioSignal Tone(double hz, double amplitude, std::size_t n, double phase) {
  AudioSignal s;
  s.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.samples[i] = amplitude *
        std::cos(2.0 * kPi * hz * static_cast<double>(i) / s.sample_rate + phase);
  return s;
}

AudioSignal AmTone(double hz, double mod_hz, double depth, std::size_t n) {
  AudioSignal s = Tone(hz, 0.5, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / s.sample_rate;
    s.samples[i] *= 1.0 - depth * 0.5 * (1.0 - std::cos(2.0 * kPi * mod_hz * t));
  }
  return s;
}

AudioSignal Silence(std::size_t n) {
  AudioSignal s;
  s.samples.assign(n, 0.0);
  return s;
}

AudioSignal Concat(const std::vector<AudioSignal> &parts) {
  AudioSignal s;
  for (const AudioSignal &p : parts)
    s.samples.insert(s.samples.end(), p.samples.begin(), p.samples.end());
  return s;
}

double SnrDb(const std::vector<double> &reference,
             const std::vector<double> &test) {
  double sig = 0.0, err = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    sig += reference[i] * reference[i];
    const double d = reference[i] - test[i];
    err += d * d;
  }
  return 10.0 * std::log10(sig / err);
}

double EnergyDb(const std::vector<double> &x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return 10.0 * std::log10(e);
}

TempDir::TempDir(const std::string &tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("privfeat-" + tag + "-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace privfeat::testing
