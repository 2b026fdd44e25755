// privfeat/der.cc

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

#include "privfeat/der.h"

#include <algorithm>
#include <map>

#include "privfeat/assignment.h"
#include "privfeat/error.h"

namespace privfeat {

namespace {

struct Region {
  double duration;
  std::vector<int> ref;
  std::vector<int> hyp;
};

std::vector<Interval> Merge(std::vector<Interval> v) {
  std::sort(v.begin(), v.end(), [](const Interval &a, const Interval &b) {
    return a.start < b.start;
  });
  std::vector<Interval> out;
  for (const Interval &iv : v) {
    if (!out.empty() && iv.start <= out.back().end)
      out.back().end = std::max(out.back().end, iv.end);
    else
      out.push_back(iv);
  }
  return out;
}

bool Inside(const std::vector<Interval> &sorted, double t) {
  auto it = std::upper_bound(
      sorted.begin(), sorted.end(), t,
      [](double x, const Interval &iv) { return x < iv.start; });
  return it != sorted.begin() && t < std::prev(it)->end;
}

// Distinct speaker ids active at time t.
std::vector<int> ActiveAt(const std::vector<Segment> &segs,
                          const std::vector<int> &ids, double t) {
  std::vector<int> out;
  for (std::size_t i = 0; i < segs.size(); ++i)
    if (segs[i].start_s < t && t < segs[i].end_s) out.push_back(ids[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> LabelIds(const std::vector<Segment> &segs, int &count) {
  std::map<std::string, int> ids;
  std::vector<int> out;
  for (const Segment &s : segs) {
    auto [it, inserted] = ids.try_emplace(s.speaker, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  count = static_cast<int>(ids.size());
  return out;
}

std::vector<Interval> ReferenceOverlap(const SegmentAnnotation &reference) {
  int n = 0;
  const std::vector<int> ids = LabelIds(reference.segments, n);
  std::vector<double> cuts;
  for (const Segment &s : reference.segments) {
    cuts.push_back(s.start_s);
    cuts.push_back(s.end_s);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    if (ActiveAt(reference.segments, ids, mid).size() > 1)
      out.push_back({cuts[i], cuts[i + 1]});
  }
  return out;
}

std::vector<Region> ScoredRegions(const SegmentAnnotation &reference,
                                  const SegmentAnnotation &hypothesis,
                                  const DerOptions &opts, int &n_ref,
                                  int &n_hyp) {
  if (!(opts.collar_s >= 0.0))
    throw Error(ErrorKind::kConfig, "collar must be >= 0");
  reference.Validate();
  hypothesis.Validate();
  const std::vector<int> ref_ids = LabelIds(reference.segments, n_ref);
  const std::vector<int> hyp_ids = LabelIds(hypothesis.segments, n_hyp);
  const std::vector<Interval> excluded = ExcludedRegions(reference, opts);

  std::vector<double> cuts;
  for (const auto *ann : {&reference, &hypothesis})
    for (const Segment &s : ann->segments) {
      cuts.push_back(s.start_s);
      cuts.push_back(s.end_s);
    }
  for (const Interval &iv : excluded) {
    cuts.push_back(iv.start);
    cuts.push_back(iv.end);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Region> regions;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    if (Inside(excluded, mid)) continue;
    Region r{cuts[i + 1] - cuts[i], ActiveAt(reference.segments, ref_ids, mid),
             ActiveAt(hypothesis.segments, hyp_ids, mid)};
    if (r.ref.empty() && r.hyp.empty()) continue;
    regions.push_back(std::move(r));
  }
  return regions;
}

}  // namespace

DerBreakdown &DerBreakdown::operator+=(const DerBreakdown &other) {
  fa_s += other.fa_s;
  miss_s += other.miss_s;
  error_s += other.error_s;
  total_s += other.total_s;
  der = total_s > 0.0 ? (fa_s + miss_s + error_s) / total_s : 0.0;
  return *this;
}

std::vector<Interval> ExcludedRegions(const SegmentAnnotation &reference,
                                      const DerOptions &opts) {
  std::vector<Interval> v;
  if (opts.collar_s > 0.0) {
    for (const Segment &s : reference.segments)
      for (double b : {s.start_s, s.end_s})
        v.push_back({b - opts.collar_s, b + opts.collar_s});
  }
  if (!opts.include_overlap) {
    const auto overlap = ReferenceOverlap(reference);
    v.insert(v.end(), overlap.begin(), overlap.end());
  }
  return Merge(std::move(v));
}

double ScoredReferenceTime(const SegmentAnnotation &reference,
                           const DerOptions &opts) {
  int n_ref = 0, n_hyp = 0;
  double total = 0.0;
  for (const Region &r : ScoredRegions(reference, {}, opts, n_ref, n_hyp))
    total += r.duration * static_cast<double>(r.ref.size());
  return total;
}

DerBreakdown ComputeDer(const SegmentAnnotation &reference,
                        const SegmentAnnotation &hypothesis,
                        const DerOptions &opts) {
  int n_ref = 0, n_hyp = 0;
  const std::vector<Region> regions =
      ScoredRegions(reference, hypothesis, opts, n_ref, n_hyp);

  std::vector<std::vector<double>> overlap(
      static_cast<std::size_t>(n_ref),
      std::vector<double>(static_cast<std::size_t>(n_hyp), 0.0));
  for (const Region &r : regions)
    for (int a : r.ref)
      for (int b : r.hyp) overlap[a][b] += r.duration;
  const std::vector<int> mapping = MaxWeightAssignment(overlap);

  DerBreakdown out;
  for (const Region &r : regions) {
    const double nr = static_cast<double>(r.ref.size());
    const double nh = static_cast<double>(r.hyp.size());
    int correct = 0;
    for (int a : r.ref)
      if (mapping[a] >= 0 &&
          std::binary_search(r.hyp.begin(), r.hyp.end(), mapping[a]))
        ++correct;
    out.total_s += r.duration * nr;
    out.miss_s += r.duration * std::max(0.0, nr - nh);
    out.fa_s += r.duration * std::max(0.0, nh - nr);
    out.error_s += r.duration * (std::min(nr, nh) - correct);
  }
  if (!(out.total_s > 0.0))
    throw Error(ErrorKind::kUndefined,
                "no scored reference speech after collar removal");
  out.der = (out.fa_s + out.miss_s + out.error_s) / out.total_s;
  return out;
}

}  // namespace privfeat
