// privfeat/audio.cc

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

#include "privfeat/audio.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "privfeat/error.h"

namespace privfeat {

namespace {

static_assert(std::endian::native == std::endian::little,
              "WAV I/O assumes a little-endian host");

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

template <typename T>
T LoadLe(const unsigned char *p) {
  T value;
  std::memcpy(&value, p, sizeof(T));
  return value;
}

template <typename T>
void StoreLe(std::ostream &os, T value) {
  os.write(reinterpret_cast<const char *>(&value), sizeof(T));
}

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
};

double DecodeSample(const unsigned char *p, const FormatChunk &fmt) {
  if (fmt.format == kFormatFloat) {
    if (fmt.bits == 32) return LoadLe<float>(p);
    return LoadLe<double>(p);
  }
  switch (fmt.bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16:
      return LoadLe<std::int16_t>(p) / 32768.0;
    case 24: {
      std::int32_t v = (static_cast<std::int32_t>(p[2]) << 24) |
                       (static_cast<std::int32_t>(p[1]) << 16) |
                       (static_cast<std::int32_t>(p[0]) << 8);
      return (v >> 8) / 8388608.0;
    }
    default:
      return LoadLe<std::int32_t>(p) / 2147483648.0;
  }
}

FormatChunk ParseFormat(const std::vector<unsigned char> &body) {
  if (body.size() < 16) throw Error(ErrorKind::kFormat, "fmt chunk too short");
  FormatChunk fmt;
  fmt.format = LoadLe<std::uint16_t>(&body[0]);
  fmt.channels = LoadLe<std::uint16_t>(&body[2]);
  fmt.sample_rate = LoadLe<std::uint32_t>(&body[4]);
  fmt.bits = LoadLe<std::uint16_t>(&body[14]);
  if (fmt.format == kFormatExtensible) {
    if (body.size() < 26)
      throw Error(ErrorKind::kFormat, "extensible fmt chunk too short");
    fmt.format = LoadLe<std::uint16_t>(&body[24]);
  }
  if (fmt.channels == 0) throw Error(ErrorKind::kFormat, "zero channels");
  if (fmt.sample_rate == 0) throw Error(ErrorKind::kFormat, "zero sample rate");
  bool ok = (fmt.format == kFormatPcm &&
             (fmt.bits == 8 || fmt.bits == 16 || fmt.bits == 24 ||
              fmt.bits == 32)) ||
            (fmt.format == kFormatFloat && (fmt.bits == 32 || fmt.bits == 64));
  if (!ok) {
    throw Error(ErrorKind::kUnsupported,
                "encoding format " + std::to_string(fmt.format) + " with " +
                    std::to_string(fmt.bits) + " bits per sample");
  }
  return fmt;
}

}  // namespace

AudioSignal ReadWav(std::istream &is) {
  std::array<unsigned char, 12> riff{};
  if (!is.read(reinterpret_cast<char *>(riff.data()), riff.size()))
    throw Error(ErrorKind::kFormat, "file shorter than RIFF header");
  if (std::memcmp(riff.data(), "RIFF", 4) != 0 ||
      std::memcmp(riff.data() + 8, "WAVE", 4) != 0)
    throw Error(ErrorKind::kFormat, "missing RIFF/WAVE signature");

  FormatChunk fmt;
  bool have_fmt = false;
  while (true) {
    std::array<unsigned char, 8> head{};
    if (!is.read(reinterpret_cast<char *>(head.data()), head.size()))
      throw Error(ErrorKind::kFormat, "no data chunk before end of file");
    std::uint32_t size = LoadLe<std::uint32_t>(head.data() + 4);
    std::vector<unsigned char> body(size);
    if (!is.read(reinterpret_cast<char *>(body.data()), size))
      throw Error(ErrorKind::kFormat, "truncated chunk '" +
                                          std::string(head.begin(),
                                                      head.begin() + 4) +
                                          "'");
    if (size % 2 == 1) is.ignore(1);

    if (std::memcmp(head.data(), "fmt ", 4) == 0) {
      fmt = ParseFormat(body);
      have_fmt = true;
    } else if (std::memcmp(head.data(), "data", 4) == 0) {
      if (!have_fmt) throw Error(ErrorKind::kFormat, "data chunk before fmt");
      const std::size_t bytes_per_sample = fmt.bits / 8;
      const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
      if (size % frame_bytes != 0)
        throw Error(ErrorKind::kFormat, "data size not a whole frame count");
      const std::size_t n = size / frame_bytes;
      AudioSignal signal;
      signal.sample_rate = static_cast<int>(fmt.sample_rate);
      signal.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t c = 0; c < fmt.channels; ++c)
          sum += DecodeSample(&body[i * frame_bytes + c * bytes_per_sample],
                              fmt);
        signal.samples[i] = sum / fmt.channels;
      }
      return signal;
    }
  }
}

AudioSignal ReadWav(const std::filesystem::path &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  try {
    return ReadWav(is);
  } catch (const Error &e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

void WriteWav(const AudioSignal &signal, std::ostream &os) {
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(signal.samples.size() * 2);
  os.write("RIFF", 4);
  StoreLe<std::uint32_t>(os, 36 + data_bytes);
  os.write("WAVEfmt ", 8);
  StoreLe<std::uint32_t>(os, 16);
  StoreLe<std::uint16_t>(os, kFormatPcm);
  StoreLe<std::uint16_t>(os, 1);
  StoreLe<std::uint32_t>(os, static_cast<std::uint32_t>(signal.sample_rate));
  StoreLe<std::uint32_t>(os, static_cast<std::uint32_t>(signal.sample_rate) * 2);
  StoreLe<std::uint16_t>(os, 2);
  StoreLe<std::uint16_t>(os, 16);
  os.write("data", 4);
  StoreLe<std::uint32_t>(os, data_bytes);
  for (double x : signal.samples) {
    double scaled = std::round(x * 32768.0);
    scaled = std::clamp(scaled, -32768.0, 32767.0);
    StoreLe<std::int16_t>(os, static_cast<std::int16_t>(scaled));
  }
}

void WriteWav(const AudioSignal &signal, const std::filesystem::path &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  WriteWav(signal, os);
  if (!os) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

void RequirePipelineRate(const AudioSignal &signal) {
  if (signal.sample_rate != kPipelineSampleRate)
    throw Error(ErrorKind::kRate,
                "expected " + std::to_string(kPipelineSampleRate) +
                    " Hz, got " + std::to_string(signal.sample_rate) + " Hz");
  for (double x : signal.samples)
    if (!std::isfinite(x))
      throw Error(ErrorKind::kFormat, "non-finite sample in signal");
}

}  // namespace privfeat
