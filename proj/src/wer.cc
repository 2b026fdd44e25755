// privfeat/wer.cc

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

#include "privfeat/wer.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "privfeat/error.h"

namespace privfeat {

WerBreakdown &WerBreakdown::operator+=(const WerBreakdown &other) {
  n_sub += other.n_sub;
  n_ins += other.n_ins;
  n_del += other.n_del;
  n_tok += other.n_tok;
  wer = n_tok > 0 ? static_cast<double>(Errors()) / static_cast<double>(n_tok)
                  : 0.0;
  return *this;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const TokenizeOptions &opts) {
  std::vector<std::string> tokens;
  std::istringstream ss{std::string(text)};
  std::string word;
  while (ss >> word) {
    if (opts.strip_punctuation)
      std::erase_if(word, [](unsigned char c) { return std::ispunct(c); });
    if (opts.case_fold)
      for (char &c : word)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!word.empty()) tokens.push_back(std::move(word));
  }
  return tokens;
}

WerBreakdown ComputeWer(const std::vector<std::string> &ref,
                        const std::vector<std::string> &hyp) {
  if (ref.empty())
    throw Error(ErrorKind::kUndefined, "WER needs a non-empty reference");
  const std::size_t m = ref.size(), n = hyp.size();
  std::vector<std::vector<std::int64_t>> d(m + 1,
                                           std::vector<std::int64_t>(n + 1));
  for (std::size_t i = 0; i <= m; ++i) d[i][0] = static_cast<std::int64_t>(i);
  for (std::size_t j = 0; j <= n; ++j) d[0][j] = static_cast<std::int64_t>(j);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      d[i][j] = std::min({d[i - 1][j - 1] + (ref[i - 1] != hyp[j - 1]),
                          d[i - 1][j] + 1, d[i][j - 1] + 1});

  WerBreakdown out;
  out.n_tok = static_cast<std::int64_t>(m);
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool differ = ref[i - 1] != hyp[j - 1];
      if (d[i][j] == d[i - 1][j - 1] + differ) {
        out.n_sub += differ;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      ++out.n_del;
      --i;
    } else {
      ++out.n_ins;
      --j;
    }
  }
  out.wer = static_cast<double>(out.Errors()) / static_cast<double>(m);
  return out;
}

}  // namespace privfeat
