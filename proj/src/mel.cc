// privfeat/mel.cc

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

#include "privfeat/mel.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

double HzToMel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

MelFilterbank BuildMelFilterbank(int n_mels, std::size_t n_fft, int sample_rate,
                                 double fmin_hz, double fmax_hz) {
  if (n_mels < 1) throw Error(ErrorKind::kConfig, "n_mels must be >= 1");
  if (n_fft < 2 || sample_rate <= 0)
    throw Error(ErrorKind::kConfig, "invalid FFT size or sample rate");
  if (!(fmin_hz >= 0.0) || !(fmin_hz < fmax_hz) ||
      fmax_hz > sample_rate / 2.0)
    throw Error(ErrorKind::kConfig,
                "band must satisfy 0 <= fmin < fmax <= sample_rate/2");

  const double mel_lo = HzToMel(fmin_hz), mel_hi = HzToMel(fmax_hz);
  std::vector<double> edges(static_cast<std::size_t>(n_mels) + 2);
  for (std::size_t i = 0; i < edges.size(); ++i)
    edges[i] = MelToHz(mel_lo + (mel_hi - mel_lo) * static_cast<double>(i) /
                                    (n_mels + 1));
  edges.front() = fmin_hz;
  edges.back() = fmax_hz;

  MelFilterbank fb;
  fb.n_mels = n_mels;
  fb.n_fft = n_fft;
  fb.sample_rate = sample_rate;
  fb.fmin_hz = fmin_hz;
  fb.fmax_hz = fmax_hz;
  fb.center_hz.assign(edges.begin() + 1, edges.end() - 1);

  const std::size_t bins = n_fft / 2 + 1;
  const double bin_hz = static_cast<double>(sample_rate) / n_fft;
  fb.weights = RowMatrix::Zero(n_mels, static_cast<Eigen::Index>(bins));
  for (int m = 0; m < n_mels; ++m) {
    const double lo = edges[m], mid = edges[m + 1], hi = edges[m + 2];
    bool any = false;
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = bin_hz * static_cast<double>(k);
      const double w = std::min((f - lo) / (mid - lo), (hi - f) / (hi - mid));
      if (w > 0.0) {
        fb.weights(m, static_cast<Eigen::Index>(k)) = w;
        any = true;
      }
    }
    if (!any) {
      throw Error(ErrorKind::kResolution,
                  "filter " + std::to_string(m) + " of " +
                      std::to_string(n_mels) + " (center " +
                      std::to_string(mid) + " Hz) covers no bin of a " +
                      std::to_string(n_fft) + "-point FFT");
    }
  }
  return fb;
}

std::string_view FeatureVariantName(FeatureVariant variant) {
  return variant == FeatureVariant::kOlmega ? "olmega" : "standard";
}

FeatureVariant ParseFeatureVariant(std::string_view name) {
  if (name == "standard") return FeatureVariant::kStandard;
  if (name == "olmega") return FeatureVariant::kOlmega;
  throw Error(ErrorKind::kConfig,
              "unknown feature variant '" + std::string(name) + "'");
}

FeatureMatrix LogMel(const Spectrogram &spec, const MelFilterbank &fb,
                     double floor) {
  if (!(floor > 0.0)) throw Error(ErrorKind::kConfig, "log floor must be > 0");
  if (spec.n_fft != fb.n_fft ||
      static_cast<Eigen::Index>(spec.num_bins()) != fb.weights.cols() ||
      spec.sample_rate() != fb.sample_rate) {
    throw Error(ErrorKind::kShape,
                "filterbank built for n_fft " + std::to_string(fb.n_fft) +
                    " at " + std::to_string(fb.sample_rate) +
                    " Hz, spectrogram has n_fft " + std::to_string(spec.n_fft) +
                    " at " + std::to_string(spec.sample_rate()) + " Hz");
  }
  FeatureMatrix out;
  out.frame_hop_s = spec.frame_hop_s;
  out.variant = FeatureVariant::kStandard;
  // Row by row with a fixed summation order: identical PSD rows must give
  // bit-identical feature rows, which a blocked matrix product does not
  // guarantee.
  const Eigen::Index bins = fb.weights.cols();
  out.values.resize(spec.power.rows(), fb.n_mels);
  for (Eigen::Index t = 0; t < spec.power.rows(); ++t) {
    const double *p = spec.power.row(t).data();
    for (Eigen::Index m = 0; m < fb.n_mels; ++m) {
      const double *w = fb.weights.row(m).data();
      double e = 0.0;
      for (Eigen::Index k = 0; k < bins; ++k) e += w[k] * p[k];
      out.values(t, m) = std::log(std::max(e, floor));
    }
  }
  return out;
}

}  // namespace privfeat
