// privfeat/error.h

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

#ifndef PRIVFEAT_ERROR_H_
#define PRIVFEAT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace privfeat {

/// Category of a library failure. Callers branch on this instead of parsing
/// messages; the message carries the human-readable detail.
enum class ErrorKind {
  kFormat,               // malformed file contents (WAV header, RTTM line, ...)
  kUnsupported,          // well-formed but unsupported encoding
  kRate,                 // sample rate other than the pipeline rate
  kTooShort,             // signal shorter than one analysis window
  kConfig,               // invalid parameter combination
  kResolution,           // Mel filters too narrow for the FFT grid
  kShape,                // dimension mismatch between operands
  kSilentFrame,          // all-zero LPC frame
  kDegenerateFrame,      // Levinson recursion broke down
  kNumeric,              // root finder failed to converge
  kSymmetry,             // pole set not closed under conjugation
  kUndefined,            // metric denominator is zero
  kClass,                // EER trial list lacks one class
  kParse,                // text input line could not be parsed
  kAllSilent,            // utterance has no voiced region
  kPool,                 // utterance pool cannot satisfy a meeting request
  kIo,                   // file could not be opened or written
};

std::string_view ErrorKindName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(std::string(ErrorKindName(kind)) + " error: " +
                           message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace privfeat

#endif  // PRIVFEAT_ERROR_H_
