// privfeat/lpc.cc

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

#include "privfeat/lpc.h"

#include <cmath>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

namespace {

constexpr double kWhiteNoiseCorrection = 1e-9;

void PushHistory(std::vector<double> &history, double value) {
  if (history.empty()) return;
  for (std::size_t k = history.size() - 1; k > 0; --k)
    history[k] = history[k - 1];
  history[0] = value;
}

}  // namespace

std::vector<double> Autocorrelation(std::span<const double> frame,
                                    int max_lag) {
  std::vector<double> r(static_cast<std::size_t>(max_lag) + 1, 0.0);
  const std::size_t n = frame.size();
  for (std::size_t lag = 0; lag < r.size() && lag < n; ++lag) {
    double sum = 0.0;
    for (std::size_t i = lag; i < n; ++i) sum += frame[i] * frame[i - lag];
    r[lag] = sum;
  }
  return r;
}

LevinsonResult LevinsonDurbin(std::span<const double> autocorr, int order) {
  if (order < 0 || autocorr.size() < static_cast<std::size_t>(order) + 1)
    throw Error(ErrorKind::kConfig, "need order + 1 autocorrelation lags");
  if (autocorr[0] == 0.0)
    throw Error(ErrorKind::kSilentFrame, "zero-energy frame");
  if (!std::isfinite(autocorr[0]) || autocorr[0] < 0.0)
    throw Error(ErrorKind::kDegenerateFrame, "invalid frame energy");

  const std::size_t p = static_cast<std::size_t>(order);
  LevinsonResult out;
  out.coefficients.assign(p, 0.0);
  out.reflection.assign(p, 0.0);
  std::vector<double> prev(p, 0.0);
  double error = autocorr[0];

  for (std::size_t i = 1; i <= p; ++i) {
    double acc = autocorr[i];
    for (std::size_t j = 1; j < i; ++j)
      acc -= out.coefficients[j - 1] * autocorr[i - j];
    const double k = acc / error;
    if (!std::isfinite(k) || std::abs(k) >= 1.0) {
      throw Error(ErrorKind::kDegenerateFrame,
                  "reflection coefficient " + std::to_string(k) +
                      " at stage " + std::to_string(i));
    }
    out.reflection[i - 1] = k;
    prev = out.coefficients;
    out.coefficients[i - 1] = k;
    for (std::size_t j = 1; j < i; ++j)
      out.coefficients[j - 1] = prev[j - 1] - k * prev[i - j - 1];
    error *= (1.0 - k * k);
    if (!(error > 0.0))
      throw Error(ErrorKind::kDegenerateFrame, "prediction error vanished");
  }
  out.error = error;
  return out;
}

LevinsonResult LpcAnalyzeDetailed(std::span<const double> frame, int order) {
  if (order < 0 || frame.size() <= static_cast<std::size_t>(order)) {
    throw Error(ErrorKind::kConfig,
                "LPC order " + std::to_string(order) +
                    " needs a frame longer than the order");
  }
  std::vector<double> r = Autocorrelation(frame, order);
  r[0] *= 1.0 + kWhiteNoiseCorrection;
  return LevinsonDurbin(r, order);
}

LpcModel LpcAnalyze(std::span<const double> frame, int order) {
  LevinsonResult lev = LpcAnalyzeDetailed(frame, order);
  return {std::move(lev.coefficients), std::sqrt(lev.error)};
}

std::vector<double> InverseFilter(std::span<const double> x,
                                  std::span<const double> a,
                                  std::vector<double> &history) {
  if (history.size() != a.size()) history.assign(a.size(), 0.0);
  std::vector<double> e(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    double pred = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) pred += a[k] * history[k];
    e[n] = x[n] - pred;
    PushHistory(history, x[n]);
  }
  return e;
}

std::vector<double> SynthesisFilter(std::span<const double> e,
                                    std::span<const double> a,
                                    std::vector<double> &history) {
  if (history.size() != a.size()) history.assign(a.size(), 0.0);
  std::vector<double> y(e.size());
  for (std::size_t n = 0; n < e.size(); ++n) {
    double pred = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) pred += a[k] * history[k];
    y[n] = e[n] + pred;
    PushHistory(history, y[n]);
  }
  return y;
}

}  // namespace privfeat
