// privfeat/tests/acceptance/acceptance.cc

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

// Acceptance run: one PASS/FAIL line per criterion with the measured value,
// the pinned tolerance and the wall time against its budget. Exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "oracles.h"
#include "privfeat/classification.h"
#include "privfeat/der.h"
#include "privfeat/eer.h"
#include "privfeat/error.h"
#include "privfeat/logging.h"
#include "privfeat/lpc.h"
#include "privfeat/mcadams.h"
#include "privfeat/mel.h"
#include "privfeat/olmega.h"
#include "privfeat/poles.h"
#include "privfeat/random.h"
#include "privfeat/simulator.h"
#include "privfeat/wer.h"

using namespace privfeat;
using namespace privfeat::testing;

namespace {

// Pinned tolerances.
constexpr double kAverageTol = 0.01;
constexpr double kSmoothingTol = 1e-6;
constexpr double kIdentitySnrDb = 40.0;
constexpr double kShiftTol = 1e-6;
constexpr double kArTol = 0.05;
constexpr double kEerOracleTol = 1e-9;
constexpr double kMccOracleTol = 1e-12;
constexpr double kEerInvarianceTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string Fmt(const char *fmt, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), fmt, a, b, c);
  return buf;
}

double TemporalVariance(const FeatureMatrix &f) {
  double total = 0.0;
  for (Eigen::Index m = 0; m < f.values.cols(); ++m) {
    const auto col = f.values.col(m);
    const double mean = col.mean();
    total += (col.array() - mean).square().sum() / static_cast<double>(col.size());
  }
  return total;
}

Outcome WeightedAverages() {
  // olMEGA column of the published per-set results, dev and test rows.
  const std::vector<double> w{0.25, 0.25, 0.20, 0.20, 0.05, 0.05};
  const std::vector<double> dev{7.53, 2.64, 5.00, 4.26, 2.62, 2.85};
  const std::vector<double> test{2.19, 1.55, 2.74, 1.43, 2.02, 0.06};
  const double d = WeightedAverage(dev, w), t = WeightedAverage(test, w);
  Outcome o;
  o.pass = std::abs(d - 4.67) <= kAverageTol && std::abs(t - 1.87) <= kAverageTol;
  o.detail = Fmt("dev=%.4f (4.67) test=%.4f (1.87) tol=%.2f", d, t, kAverageTol);
  return o;
}

Outcome OlmegaIdentities() {
  const OlmegaConfig cfg;
  const double a = SmoothingCoefficient(cfg.hop_ms / 1000.0, cfg.tau_ms);
  const std::size_t factor = cfg.SubsampleFactor();
  const AudioSignal speech = SyntheticSpeech(2.0, 11);
  const MelFilterbank fb = BuildMelFilterbank(80, 512, 16000);
  const FeatureMatrix f = OlmegaFeatures(speech, cfg, fb);
  bool repeats = f.num_frames() % 10 == 0;
  for (std::size_t r = 0; r < f.num_frames(); ++r)
    repeats = repeats && f.values.row(r) == f.values.row(r / 10 * 10);
  bool distinct = false;  // groups are not all identical to each other
  for (std::size_t r = 10; r < f.num_frames(); r += 10)
    distinct = distinct || f.values.row(r) != f.values.row(r - 10);
  Outcome o;
  o.pass = std::abs(a - 0.904837) <= kSmoothingTol && factor == 10 && repeats && distinct;
  o.detail = Fmt("a=%.7f (0.904837, tol %.0e) factor=%.0f", a, kSmoothingTol,
                 static_cast<double>(factor)) +
             " rows=" + std::to_string(f.num_frames()) +
             (repeats ? " groups-of-10=exact" : " groups-of-10=BROKEN");
  return o;
}

Outcome McAdamsIdentity() {
  const AudioSignal speech = SyntheticSpeech(3.0, 21);
  McAdamsConfig cfg;
  cfg.fixed_alpha = 1.0;
  const AnonymizedUtterance out = AnonymizeUtterance(speech, cfg);
  const double snr = out.signal.size() == speech.size()
                         ? SnrDb(speech.samples, out.signal.samples)
                         : -INFINITY;
  PoleSet set;
  set.poles = {{0.9, 0.5}, {0.9, -0.5}, {0.75, 1.7}, {0.75, -1.7}, {0.6, 0.0}};
  const PoleSet shifted = ShiftPoles(set, 0.8);
  bool radii = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    radii = radii && shifted.poles[i].radius == set.poles[i].radius;
  const double angle = shifted.poles[0].angle;
  Outcome o;
  o.pass = snr > kIdentitySnrDb && std::abs(angle - 0.574349) <= kShiftTol &&
           shifted.poles[1].angle == -angle && radii;
  o.detail = Fmt("snr=%.1f dB (> %.0f) shifted=%.7f", snr, kIdentitySnrDb, angle) +
             Fmt(" (0.574349, tol %.0e)", kShiftTol) +
             (radii ? " radii=exact" : " radii=CHANGED");
  return o;
}

Outcome LpcRecovery() {
  int passed = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1000; seed < 1020; ++seed) {
    const LpcModel m = LpcAnalyze(ArProcess({1.5, -0.7}, 4000, seed), 2);
    const double err = std::max(std::abs(m.coefficients[0] - 1.5),
                                std::abs(m.coefficients[1] + 0.7));
    worst = std::max(worst, err);
    passed += err <= kArTol;
  }
  Outcome o;
  o.pass = passed == 20;
  o.detail = Fmt("%.0f/20 trials, worst |err|=%.4f (tol %.2f)", passed, worst, kArTol);
  return o;
}

Outcome MetricOracles() {
  std::mt19937_64 gen(20260201);
  int wer_ok = 0, eer_ok = 0, der_ok = 0, mcc_ok = 0;
  double eer_worst = 0.0, mcc_worst = 0.0;

  std::uniform_int_distribution<int> len(1, 6), hlen(0, 6), tok(0, 3);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> ref(len(gen)), hyp(hlen(gen));
    for (auto &t : ref) t = std::string(1, static_cast<char>('a' + tok(gen)));
    for (auto &t : hyp) t = std::string(1, static_cast<char>('a' + tok(gen)));
    wer_ok += ComputeWer(ref, hyp).Errors() == ExhaustiveEditDistance(ref, hyp);
  }

  std::uniform_int_distribution<int> n(1, 12), coarse(0, 5);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<TrialScore> trials;
    const bool ties = i % 3 == 0;
    for (int k = n(gen); k > 0; --k)
      trials.push_back({true, ties ? coarse(gen) * 0.5 : 1.0 + g(gen)});
    for (int k = n(gen); k > 0; --k)
      trials.push_back({false, ties ? coarse(gen) * 0.4 : g(gen)});
    const EerResult r = ComputeEer(trials);
    const SweepEer s = BruteForceEer(trials);
    const double d = std::max(std::abs(r.eer - s.eer), std::abs(r.threshold - s.threshold));
    eer_worst = std::max(eer_worst, d);
    eer_ok += d <= kEerOracleTol;
  }

  for (int i = 0; i < 1000; ++i) {
    const SegmentAnnotation ref = RandomGridAnnotation(gen, 4, 8, 40, 0.25, "r");
    const SegmentAnnotation hyp = RandomGridAnnotation(gen, 4, 8, 40, 0.25, "h");
    const double collar = (i % 2) ? 0.25 : 0.0;
    const bool overlap = i % 4 < 2;
    const OracleDer o = ExhaustiveDer(ref, hyp, collar, overlap, 0.125);
    try {
      const DerBreakdown d = ComputeDer(ref, hyp, {collar, overlap});
      der_ok += o.total_s > 0.0 && d.total_s == o.total_s && d.fa_s == o.fa_s &&
                d.miss_s == o.miss_s && d.error_s == o.error_s;
    } catch (const Error &e) {
      der_ok += e.kind() == ErrorKind::kUndefined && o.total_s == 0.0;
    }
  }

  std::uniform_int_distribution<std::uint64_t> count(0, 200);
  for (int i = 0; i < 1000; ++i) {
    const ConfusionCounts c{count(gen), count(gen), count(gen), count(gen)};
    const double d = std::abs(ComputeMcc(c) - DirectMcc(c));
    mcc_worst = std::max(mcc_worst, d);
    mcc_ok += d <= kMccOracleTol;
  }

  Outcome o;
  o.pass = wer_ok == 1000 && eer_ok == 1000 && der_ok == 1000 && mcc_ok == 1000;
  std::ostringstream s;
  s << "wer " << wer_ok << "/1000 exact; eer " << eer_ok << "/1000 (worst "
    << eer_worst << ", tol " << kEerOracleTol << "); der " << der_ok
    << "/1000 exact; mcc " << mcc_ok << "/1000 (worst " << mcc_worst
    << ", tol " << kMccOracleTol << ")";
  o.detail = s.str();
  return o;
}

struct SimulatedCorpus {
  std::vector<MeetingPlan> plans;
  std::vector<RenderedMeeting> rendered;
};

SimulatedCorpus Simulate(const UtterancePool &pool,
                         const std::map<std::string, AudioSignal> &audio) {
  SimulatedCorpus c;
  c.plans = PlanMeetings(pool, 50, 77);
  for (const MeetingPlan &p : c.plans) c.rendered.push_back(RenderMeeting(p, audio));
  return c;
}

Outcome SimulatorConsistency() {
  // 200 speakers with three noise-burst utterances of 1-3 s each.
  UtterancePool pool;
  std::map<std::string, AudioSignal> audio;
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> dur(1.0, 3.0);
  for (int s = 0; s < 200; ++s)
    for (int u = 0; u < 3; ++u) {
      const std::string spk = "spk" + std::to_string(s);
      const std::string utt = spk + "_" + std::to_string(u);
      AudioSignal sig;
      sig.samples = WhiteNoise(static_cast<std::size_t>(dur(gen) * 16000),
                               DeriveSeed(31, pool.entries.size()), 0.1);
      pool.entries.push_back({spk, utt, "", sig.DurationSeconds()});
      audio[utt] = std::move(sig);
    }

  const SimulatedCorpus a = Simulate(pool, audio);
  const SimulatedCorpus b = Simulate(pool, audio);

  int overlap_free = 0, der_zero = 0, identical = 0, sized = 0;
  std::set<std::string> used;
  bool reused = false;
  for (std::size_t m = 0; m < a.plans.size(); ++m) {
    const MeetingPlan &p = a.plans[m];
    bool ok = true;
    for (std::size_t i = 0; i + 1 < p.timeline.size(); ++i)
      ok = ok && p.timeline[i].onset_sample + p.timeline[i].num_samples <=
                     p.timeline[i + 1].onset_sample;
    const auto &segs = a.rendered[m].annotation.segments;
    for (std::size_t i = 0; i + 1 < segs.size(); ++i)
      ok = ok && segs[i].end_s <= segs[i + 1].start_s;
    overlap_free += ok;
    for (const TimelineEntry &e : p.timeline) reused = reused || !used.insert(e.utterance_id).second;
    const SegmentAnnotation &ref = a.rendered[m].annotation;
    der_zero += ComputeDer(ref, ref).der == 0.0;
    const auto &x = a.rendered[m].audio.samples, &y = b.rendered[m].audio.samples;
    identical += x.size() == y.size() &&
                 std::memcmp(x.data(), y.data(), x.size() * sizeof(x[0])) == 0 &&
                 b.rendered[m].annotation.segments.size() == segs.size() &&
                 b.plans[m].seed == p.seed;
    sized += p.participants.size() == 3 || p.participants.size() == 4;
  }
  const int n = static_cast<int>(a.plans.size());
  Outcome o;
  o.pass = n == 50 && overlap_free == n && der_zero == n && identical == n &&
           sized == n && !reused;
  std::ostringstream s;
  s << n << " meetings: overlap-free " << overlap_free << ", DER(ref,ref)=0 "
    << der_zero << ", bit-identical rerun " << identical << ", 3-4 participants "
    << sized << ", utterance reuse " << (reused ? "YES" : "none");
  o.detail = s.str();
  return o;
}

Outcome SmoothingLowPass() {
  const AudioSignal am = AmTone(1000.0, 4.0, 0.9, 16000 * 4);
  const MelFilterbank fb = BuildMelFilterbank(80, 512, 16000);
  const double ol = TemporalVariance(OlmegaFeatures(am, OlmegaConfig{}, fb));
  const double st = TemporalVariance(StandardFeatures(am, fb, OlmegaConfig{}.Framing()));
  Outcome o;
  o.pass = ol < st;
  o.detail = Fmt("olMEGA variance=%.4f < unsmoothed variance=%.4f", ol, st);
  return o;
}

Outcome EerInvariance() {
  std::mt19937_64 gen(20260301);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<int> n(5, 60);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::vector<TrialScore> t;
    for (int k = n(gen); k > 0; --k) t.push_back({true, 1.0 + g(gen)});
    for (int k = n(gen); k > 0; --k) t.push_back({false, g(gen)});
    std::vector<TrialScore> e = t;
    for (TrialScore &s : e) s.score = std::exp(s.score);
    worst = std::max(worst, std::abs(ComputeEer(t).eer - ComputeEer(e).eer));
  }
  Outcome o;
  o.pass = worst <= kEerInvarianceTol;
  o.detail = Fmt("100 sets, worst |dEER|=%.3g (tol %.0e)", worst, kEerInvarianceTol);
  return o;
}

}  // namespace

int main() {
  SetLogSink({});
  const std::vector<Criterion> criteria{
      {1, "weighted-average reproduction", 1.0, WeightedAverages},
      {2, "olMEGA parameter identities", 1.0, OlmegaIdentities},
      {3, "McAdams identity and pole shift", 5.0, McAdamsIdentity},
      {4, "LPC AR(2) recovery", 5.0, LpcRecovery},
      {5, "metric oracles", 60.0, MetricOracles},
      {6, "simulator self-consistency", 60.0, SimulatorConsistency},
      {7, "smoothing low-pass property", 5.0, SmoothingLowPass},
      {8, "EER monotone-transform invariance", 5.0, EerInvariance},
  };
  int failed = 0;
  for (const Criterion &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs < c.budget_s;
    const bool pass = o.pass && in_budget;
    failed += !pass;
    std::printf("[%s] %d %s: %s | %.3f s (budget < %.0f s%s)\n",
                pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                secs, c.budget_s, in_budget ? "" : ", EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
