// privfeat/feature-io.h

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

#ifndef PRIVFEAT_FEATURE_IO_H_
#define PRIVFEAT_FEATURE_IO_H_

#include <filesystem>
#include <iosfwd>

#include "privfeat/mel.h"

namespace privfeat {

// Text layout:
//   # variant=<standard|olmega>,hop_s=<seconds>,n_mels=<M>,rows=<T>
//   mel_0,mel_1,...,mel_<M-1>
//   <T lines of M comma-separated values, %.9g>
void WriteFeaturesCsv(const FeatureMatrix &features, std::ostream &os);
FeatureMatrix ReadFeaturesCsv(std::istream &is);

// Binary layout, all little-endian:
//   [0, 8)   magic "PFEATMAT"
//   [8, 10)  uint16 version (1)
//   [10]     uint8 variant (0 standard, 1 olmega)
//   [11]     reserved, 0
//   [12, 16) float32 frame hop in seconds
//   uint64 rows, uint64 cols
//   rows * cols float32, row-major
inline constexpr char kFeatureMagic[8] = {'P', 'F', 'E', 'A',
                                          'T', 'M', 'A', 'T'};
inline constexpr unsigned kFeatureFormatVersion = 1;

void WriteFeaturesBinary(const FeatureMatrix &features, std::ostream &os);
FeatureMatrix ReadFeaturesBinary(std::istream &is);

enum class FeatureFormat { kCsv, kBinary };

void WriteFeatures(const FeatureMatrix &features,
                   const std::filesystem::path &path, FeatureFormat format);
FeatureMatrix ReadFeatures(const std::filesystem::path &path,
                           FeatureFormat format);

}  // namespace privfeat

#endif  // PRIVFEAT_FEATURE_IO_H_
