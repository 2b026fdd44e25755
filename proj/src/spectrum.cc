// privfeat/spectrum.cc

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

#include "privfeat/spectrum.h"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

namespace {

struct FftwDeleter {
  void operator()(void *p) const { fftw_free(p); }
};

// The FFTW planner is not reentrant. Plans are created once per size under
// the lock and then executed through the new-array interface, which is.
class R2cPlanCache {
 public:
  static R2cPlanCache &Instance() {
    static R2cPlanCache cache;
    return cache;
  }

  fftw_plan Get(std::size_t n_fft) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = plans_.find(n_fft);
    if (it != plans_.end()) return it->second;
    const int n = static_cast<int>(n_fft);
    std::unique_ptr<double, FftwDeleter> in(fftw_alloc_real(n_fft));
    std::unique_ptr<fftw_complex, FftwDeleter> out(
        fftw_alloc_complex(n_fft / 2 + 1));
    fftw_plan plan =
        fftw_plan_dft_r2c_1d(n, in.get(), out.get(), FFTW_ESTIMATE);
    plans_.emplace(n_fft, plan);
    return plan;
  }

  ~R2cPlanCache() {
    for (auto &[size, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, fftw_plan> plans_;
};

}  // namespace

std::size_t NextPowerOfTwo(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Spectrogram PowerSpectrum(const Frames &frames, std::size_t n_fft) {
  if (n_fft == 0 || (n_fft & (n_fft - 1)) != 0)
    throw Error(ErrorKind::kConfig,
                "n_fft " + std::to_string(n_fft) + " is not a power of two");
  if (n_fft < frames.frame_length())
    throw Error(ErrorKind::kConfig,
                "n_fft " + std::to_string(n_fft) + " below frame length " +
                    std::to_string(frames.frame_length()));

  const std::size_t bins = n_fft / 2 + 1;
  Spectrogram spec;
  spec.n_fft = n_fft;
  spec.frame_hop_s = frames.hop_seconds();
  spec.bin_hz = static_cast<double>(frames.sample_rate) / n_fft;
  spec.power.resize(static_cast<Eigen::Index>(frames.num_frames()),
                    static_cast<Eigen::Index>(bins));

  fftw_plan plan = R2cPlanCache::Instance().Get(n_fft);
  std::unique_ptr<double, FftwDeleter> in(fftw_alloc_real(n_fft));
  std::unique_ptr<fftw_complex, FftwDeleter> out(fftw_alloc_complex(bins));
  for (std::size_t t = 0; t < frames.num_frames(); ++t) {
    for (std::size_t k = 0; k < n_fft; ++k)
      in.get()[k] = k < frames.frame_length() ? frames.data(t, k) : 0.0;
    fftw_execute_dft_r2c(plan, in.get(), out.get());
    for (std::size_t f = 0; f < bins; ++f) {
      const double re = out.get()[f][0], im = out.get()[f][1];
      spec.power(t, f) = re * re + im * im;
    }
  }
  return spec;
}

}  // namespace privfeat
