// privfeat/wer.h

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

#ifndef PRIVFEAT_WER_H_
#define PRIVFEAT_WER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace privfeat {

struct WerBreakdown {
  std::int64_t n_sub = 0;
  std::int64_t n_ins = 0;
  std::int64_t n_del = 0;
  std::int64_t n_tok = 0;  // reference tokens
  double wer = 0.0;        // (n_sub + n_ins + n_del) / n_tok; may exceed 1

  std::int64_t Errors() const { return n_sub + n_ins + n_del; }
  /// Adds the counts of `other` and recomputes the rate.
  WerBreakdown &operator+=(const WerBreakdown &other);
};

struct TokenizeOptions {
  bool case_fold = true;
  bool strip_punctuation = false;
};

/// Whitespace split with optional ASCII case folding and punctuation
/// removal (tokens that become empty are dropped).
std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizeOptions &opts = {});

/// Unit-cost Levenshtein alignment. Counts come from one optimal path; the
/// backtrace prefers a diagonal step (match or substitution), then a
/// deletion, then an insertion. Throws kUndefined for an empty reference.
WerBreakdown ComputeWer(const std::vector<std::string> &ref,
                        const std::vector<std::string> &hyp);

}  // namespace privfeat

#endif  // PRIVFEAT_WER_H_
