// privfeat/feature-io.cc

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

#include "privfeat/feature-io.h"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "privfeat/error.h"

namespace privfeat {

namespace {

template <typename T>
void Put(std::ostream &os, T value) {
  os.write(reinterpret_cast<const char *>(&value), sizeof(T));
}

template <typename T>
T Get(std::istream &is) {
  T value{};
  if (!is.read(reinterpret_cast<char *>(&value), sizeof(T)))
    throw Error(ErrorKind::kFormat, "truncated feature file");
  return value;
}

std::vector<std::string> SplitComma(const std::string &line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

void WriteFeaturesCsv(const FeatureMatrix &features, std::ostream &os) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", features.frame_hop_s);
  os << "# variant=" << FeatureVariantName(features.variant)
     << ",hop_s=" << buf << ",n_mels=" << features.num_mels()
     << ",rows=" << features.num_frames() << '\n';
  for (std::size_t m = 0; m < features.num_mels(); ++m)
    os << (m ? "," : "") << "mel_" << m;
  os << '\n';
  for (Eigen::Index t = 0; t < features.values.rows(); ++t) {
    for (Eigen::Index m = 0; m < features.values.cols(); ++m) {
      std::snprintf(buf, sizeof(buf), "%.9g", features.values(t, m));
      os << (m ? "," : "") << buf;
    }
    os << '\n';
  }
}

FeatureMatrix ReadFeaturesCsv(std::istream &is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0)
    throw Error(ErrorKind::kFormat, "missing feature CSV metadata line");
  FeatureMatrix out;
  std::size_t n_mels = 0, rows = 0;
  for (const std::string &kv : SplitComma(line.substr(2))) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::kFormat, "bad metadata field '" + kv + "'");
    const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
    if (key == "variant") out.variant = ParseFeatureVariant(value);
    else if (key == "hop_s") out.frame_hop_s = std::stod(value);
    else if (key == "n_mels") n_mels = std::stoul(value);
    else if (key == "rows") rows = std::stoul(value);
  }
  if (!std::getline(is, line))
    throw Error(ErrorKind::kFormat, "missing feature CSV column header");
  out.values.resize(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(n_mels));
  for (std::size_t t = 0; t < rows; ++t) {
    if (!std::getline(is, line))
      throw Error(ErrorKind::kFormat, "feature CSV ends after " +
                                          std::to_string(t) + " rows");
    const auto fields = SplitComma(line);
    if (fields.size() != n_mels)
      throw Error(ErrorKind::kFormat,
                  "row " + std::to_string(t) + " has " +
                      std::to_string(fields.size()) + " columns");
    for (std::size_t m = 0; m < n_mels; ++m)
      out.values(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(m)) =
          std::stod(fields[m]);
  }
  return out;
}

void WriteFeaturesBinary(const FeatureMatrix &features, std::ostream &os) {
  os.write(kFeatureMagic, sizeof(kFeatureMagic));
  Put<std::uint16_t>(os, kFeatureFormatVersion);
  Put<std::uint8_t>(os, features.variant == FeatureVariant::kOlmega ? 1 : 0);
  Put<std::uint8_t>(os, 0);
  Put<float>(os, static_cast<float>(features.frame_hop_s));
  Put<std::uint64_t>(os, features.num_frames());
  Put<std::uint64_t>(os, features.num_mels());
  for (Eigen::Index t = 0; t < features.values.rows(); ++t)
    for (Eigen::Index m = 0; m < features.values.cols(); ++m)
      Put<float>(os, static_cast<float>(features.values(t, m)));
}

FeatureMatrix ReadFeaturesBinary(std::istream &is) {
  char magic[sizeof(kFeatureMagic)];
  if (!is.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kFeatureMagic, sizeof(magic)) != 0)
    throw Error(ErrorKind::kFormat, "bad feature file magic");
  const auto version = Get<std::uint16_t>(is);
  if (version != kFeatureFormatVersion)
    throw Error(ErrorKind::kUnsupported,
                "feature format version " + std::to_string(version));
  const auto variant = Get<std::uint8_t>(is);
  Get<std::uint8_t>(is);
  FeatureMatrix out;
  out.variant = variant == 1 ? FeatureVariant::kOlmega : FeatureVariant::kStandard;
  out.frame_hop_s = Get<float>(is);
  const auto rows = Get<std::uint64_t>(is);
  const auto cols = Get<std::uint64_t>(is);
  out.values.resize(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));
  for (Eigen::Index t = 0; t < out.values.rows(); ++t)
    for (Eigen::Index m = 0; m < out.values.cols(); ++m)
      out.values(t, m) = Get<float>(is);
  return out;
}

void WriteFeatures(const FeatureMatrix &features,
                   const std::filesystem::path &path, FeatureFormat format) {
  std::ofstream os(path, format == FeatureFormat::kBinary ? std::ios::binary
                                                          : std::ios::out);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  if (format == FeatureFormat::kBinary)
    WriteFeaturesBinary(features, os);
  else
    WriteFeaturesCsv(features, os);
  if (!os) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

FeatureMatrix ReadFeatures(const std::filesystem::path &path,
                           FeatureFormat format) {
  std::ifstream is(path, format == FeatureFormat::kBinary ? std::ios::binary
                                                          : std::ios::in);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return format == FeatureFormat::kBinary ? ReadFeaturesBinary(is)
                                          : ReadFeaturesCsv(is);
}

}  // namespace privfeat
