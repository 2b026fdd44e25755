// privfeat/error.cc

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

#include "privfeat/error.h"

namespace privfeat {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kRate: return "rate";
    case ErrorKind::kTooShort: return "too-short";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kResolution: return "resolution";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kSilentFrame: return "silent-frame";
    case ErrorKind::kDegenerateFrame: return "degenerate-frame";
    case ErrorKind::kNumeric: return "numeric";
    case ErrorKind::kSymmetry: return "symmetry";
    case ErrorKind::kUndefined: return "undefined-denominator";
    case ErrorKind::kClass: return "class";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kAllSilent: return "all-silent";
    case ErrorKind::kPool: return "pool";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace privfeat
