// privfeat/simulator.cc

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

#include "privfeat/simulator.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "privfeat/error.h"
#include "privfeat/framing.h"
#include "privfeat/logging.h"

namespace privfeat {

namespace {

std::string Trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

TrimResult TrimSilence(const AudioSignal &signal, const TrimOptions &opts) {
  const std::size_t n = signal.size();
  const std::size_t win = MsToSamples(opts.window_ms, signal.sample_rate);
  const std::size_t hop = MsToSamples(opts.hop_ms, signal.sample_rate);
  if (n == 0) throw Error(ErrorKind::kAllSilent, "empty signal");

  const std::size_t num_frames = n < win ? 1 : (n - win) / hop + 1;
  std::vector<double> rms(num_frames);
  double max_rms = 0.0;
  for (std::size_t t = 0; t < num_frames; ++t) {
    const std::size_t begin = t * hop, end = std::min(n, begin + win);
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i)
      sum += signal.samples[i] * signal.samples[i];
    rms[t] = std::sqrt(sum / static_cast<double>(end - begin));
    max_rms = std::max(max_rms, rms[t]);
  }
  if (!(max_rms > 0.0)) throw Error(ErrorKind::kAllSilent, "all-zero signal");
  const double threshold = max_rms * std::pow(10.0, -opts.threshold_db / 20.0);

  // A run of k frames spans (k - 1) * hop + win samples.
  const double min_span = opts.min_voiced_ms * signal.sample_rate / 1000.0;
  const std::size_t min_run = static_cast<std::size_t>(std::max(
      1.0, std::ceil((min_span - static_cast<double>(win)) / hop) + 1.0));

  std::size_t first_frame = num_frames, last_frame = 0;
  for (std::size_t t = 0; t < num_frames;) {
    if (rms[t] < threshold) {
      ++t;
      continue;
    }
    std::size_t end = t;
    while (end < num_frames && rms[end] >= threshold) ++end;
    if (end - t >= min_run || end - t == num_frames) {
      if (first_frame == num_frames) first_frame = t;
      last_frame = end - 1;
    }
    t = end;
  }
  if (first_frame == num_frames) {
    throw Error(ErrorKind::kAllSilent,
                "no voiced run of at least " +
                    std::to_string(opts.min_voiced_ms) + " ms");
  }

  TrimResult out;
  const std::size_t first_lo = first_frame * hop;
  const std::size_t first_hi = std::min(n, first_lo + win);
  out.start_sample = first_lo;
  for (std::size_t i = first_lo; i < first_hi; ++i)
    if (std::abs(signal.samples[i]) >= threshold) {
      out.start_sample = i;
      break;
    }
  const std::size_t last_lo = last_frame * hop;
  // Samples after the final full frame belong to no frame; when that frame
  // is voiced they are searched too rather than cut unconditionally.
  const std::size_t last_hi =
      last_frame + 1 == num_frames ? n : std::min(n, last_lo + win);
  out.end_sample = last_hi;
  for (std::size_t i = last_hi; i > last_lo; --i)
    if (std::abs(signal.samples[i - 1]) >= threshold) {
      out.end_sample = i;
      break;
    }
  if (out.end_sample <= out.start_sample)
    throw Error(ErrorKind::kAllSilent, "trimmed span is empty");

  out.start_offset_s =
      static_cast<double>(out.start_sample) / signal.sample_rate;
  out.end_offset_s =
      static_cast<double>(n - out.end_sample) / signal.sample_rate;
  out.signal.sample_rate = signal.sample_rate;
  out.signal.samples.assign(
      signal.samples.begin() + static_cast<std::ptrdiff_t>(out.start_sample),
      signal.samples.begin() + static_cast<std::ptrdiff_t>(out.end_sample));
  return out;
}

void NormalizeRms(AudioSignal &signal, double target_dbfs) {
  double sum = 0.0;
  for (double x : signal.samples) sum += x * x;
  if (signal.samples.empty() || sum == 0.0) return;
  const double rms = std::sqrt(sum / static_cast<double>(signal.size()));
  const double gain = std::pow(10.0, target_dbfs / 20.0) / rms;
  for (double &x : signal.samples) x *= gain;
}

std::vector<std::string> UtterancePool::Speakers() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const PoolEntry &e : entries)
    if (seen.insert(e.speaker_id).second) out.push_back(e.speaker_id);
  return out;
}

void UtterancePool::Validate() const {
  std::set<std::string> ids;
  for (const PoolEntry &e : entries) {
    if (!ids.insert(e.utterance_id).second)
      throw Error(ErrorKind::kPool,
                  "duplicate utterance id '" + e.utterance_id + "'");
    if (!(e.duration_s > 0.0))
      throw Error(ErrorKind::kPool,
                  "utterance '" + e.utterance_id + "' has no duration");
  }
}

UtterancePool ReadPoolManifest(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  UtterancePool pool;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = Trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(Trim(f));
    if (line_no == 1 && !fields.empty() && fields[0] == "speaker_id") continue;
    if (fields.size() < 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty())
      throw Error(ErrorKind::kParse,
                  path.string() + " line " + std::to_string(line_no) +
                      ": expected speaker_id,utterance_id,path");
    std::filesystem::path audio = fields[2];
    if (audio.is_relative()) audio = path.parent_path() / audio;
    pool.entries.push_back({fields[0], fields[1], audio, 0.0});
  }
  return pool;
}

LoadedPool LoadPool(const UtterancePool &manifest, const TrimOptions &trim,
                    bool normalize_gain, double target_dbfs) {
  LoadedPool out;
  for (const PoolEntry &e : manifest.entries) {
    if (out.audio.count(e.utterance_id))
      throw Error(ErrorKind::kPool,
                  "duplicate utterance id '" + e.utterance_id + "'");
    AudioSignal signal = ReadWav(e.path);
    RequirePipelineRate(signal);
    TrimResult trimmed;
    try {
      trimmed = TrimSilence(signal, trim);
    } catch (const Error &err) {
      if (err.kind() != ErrorKind::kAllSilent) throw;
      LogWarning("excluding " + e.utterance_id + ": " + err.what());
      out.excluded.push_back(e.utterance_id);
      continue;
    }
    if (normalize_gain) NormalizeRms(trimmed.signal, target_dbfs);
    PoolEntry entry = e;
    entry.duration_s = trimmed.signal.DurationSeconds();
    out.pool.entries.push_back(entry);
    out.audio.emplace(e.utterance_id, std::move(trimmed.signal));
  }
  return out;
}

MeetingPlan PlanTurns(const UtterancePool &pool,
                      const std::vector<std::string> &participants, Rng &rng,
                      const PlanOptions &opts) {
  if (participants.empty())
    throw Error(ErrorKind::kPool, "meeting without participants");
  if (!(opts.gap_min_s >= 0.0) || opts.gap_max_s < opts.gap_min_s)
    throw Error(ErrorKind::kConfig, "gap range must satisfy 0 <= min <= max");

  const std::size_t n = participants.size();
  std::vector<std::vector<std::size_t>> remaining(n);
  for (std::size_t i = 0; i < pool.entries.size(); ++i) {
    const auto it = std::find(participants.begin(), participants.end(),
                              pool.entries[i].speaker_id);
    if (it != participants.end())
      remaining[static_cast<std::size_t>(it - participants.begin())].push_back(i);
  }
  for (std::size_t s = 0; s < n; ++s)
    if (remaining[s].empty())
      throw Error(ErrorKind::kPool,
                  "speaker '" + participants[s] + "' has no utterances");

  MeetingPlan plan;
  plan.participants = participants;
  plan.sample_rate = opts.sample_rate;
  plan.gap_min_s = opts.gap_min_s;
  plan.gap_max_s = opts.gap_max_s;
  auto draw_gap = [&]() {
    return static_cast<std::int64_t>(std::llround(
        rng.Uniform(opts.gap_min_s, opts.gap_max_s) * opts.sample_rate));
  };

  std::vector<std::int64_t> accumulated(n, 0);
  std::size_t previous = n;
  std::int64_t cursor = 0;
  while (true) {
    std::vector<std::size_t> candidates;
    for (std::size_t s = 0; s < n; ++s)
      if (!remaining[s].empty()) candidates.push_back(s);
    if (candidates.empty()) break;
    if (candidates.size() > 1)
      std::erase(candidates, previous);

    std::int64_t least = std::numeric_limits<std::int64_t>::max();
    for (std::size_t s : candidates) least = std::min(least, accumulated[s]);
    std::vector<std::size_t> tied;
    for (std::size_t s : candidates)
      if (accumulated[s] == least) tied.push_back(s);
    const std::size_t speaker = tied[rng.Index(tied.size())];

    auto &left = remaining[speaker];
    const std::size_t pick = rng.Index(left.size());
    const PoolEntry &entry = pool.entries[left[pick]];
    left.erase(left.begin() + static_cast<std::ptrdiff_t>(pick));

    TimelineEntry turn;
    turn.speaker_id = entry.speaker_id;
    turn.utterance_id = entry.utterance_id;
    turn.num_samples = static_cast<std::int64_t>(
        std::llround(entry.duration_s * opts.sample_rate));
    if (turn.num_samples <= 0)
      throw Error(ErrorKind::kPool,
                  "utterance '" + entry.utterance_id + "' has no duration");
    turn.onset_sample = cursor + draw_gap();
    cursor = turn.onset_sample + turn.num_samples;
    accumulated[speaker] += turn.num_samples;
    previous = speaker;
    plan.timeline.push_back(std::move(turn));
  }
  plan.total_samples = cursor + draw_gap();
  return plan;
}

MeetingPlan PlanMeeting(const UtterancePool &pool, int n_speakers, Rng &rng,
                        const PlanOptions &opts) {
  if (n_speakers != 3 && n_speakers != 4)
    throw Error(ErrorKind::kConfig, "meetings have 3 or 4 speakers");
  std::vector<std::string> speakers = pool.Speakers();
  if (speakers.size() < static_cast<std::size_t>(n_speakers)) {
    throw Error(ErrorKind::kPool,
                "pool has " + std::to_string(speakers.size()) +
                    " speakers, meeting needs " + std::to_string(n_speakers));
  }
  rng.Shuffle(speakers);
  speakers.resize(static_cast<std::size_t>(n_speakers));
  return PlanTurns(pool, speakers, rng, opts);
}

std::vector<MeetingPlan> PlanMeetings(const UtterancePool &pool, int n_meetings,
                                      std::uint64_t seed,
                                      const PlanOptions &opts) {
  pool.Validate();
  std::vector<std::string> speakers = pool.Speakers();
  Rng assign(DeriveSeed(seed, std::numeric_limits<std::uint64_t>::max()));
  assign.Shuffle(speakers);

  std::vector<MeetingPlan> plans;
  std::size_t next = 0;
  for (int k = 0; k < n_meetings; ++k) {
    const std::size_t left = speakers.size() - next;
    if (left < 3) break;
    std::size_t size = 3 + assign.Index(2);
    if (size > left) size = left;
    std::vector<std::string> group(
        speakers.begin() + static_cast<std::ptrdiff_t>(next),
        speakers.begin() + static_cast<std::ptrdiff_t>(next + size));
    next += size;

    const std::uint64_t meeting_seed = DeriveSeed(seed, static_cast<std::uint64_t>(k));
    Rng rng(meeting_seed);
    MeetingPlan plan = PlanTurns(pool, group, rng, opts);
    char id[32];
    std::snprintf(id, sizeof(id), "meeting_%03d", k);
    plan.meeting_id = id;
    plan.seed = meeting_seed;
    plans.push_back(std::move(plan));
  }
  return plans;
}

RenderedMeeting RenderMeeting(const MeetingPlan &plan,
                              const std::map<std::string, AudioSignal> &audio) {
  RenderedMeeting out;
  out.audio.sample_rate = plan.sample_rate;
  out.audio.samples.assign(static_cast<std::size_t>(plan.total_samples), 0.0);
  out.annotation.recording_id = plan.meeting_id;
  for (const TimelineEntry &turn : plan.timeline) {
    const auto it = audio.find(turn.utterance_id);
    if (it == audio.end())
      throw Error(ErrorKind::kPool,
                  "no audio for utterance '" + turn.utterance_id + "'");
    const AudioSignal &src = it->second;
    if (src.sample_rate != plan.sample_rate)
      throw Error(ErrorKind::kRate, "utterance '" + turn.utterance_id +
                                        "' is at " +
                                        std::to_string(src.sample_rate) + " Hz");
    if (static_cast<std::int64_t>(src.size()) != turn.num_samples)
      throw Error(ErrorKind::kShape,
                  "utterance '" + turn.utterance_id +
                      "' length differs from the plan");
    if (turn.onset_sample + turn.num_samples > plan.total_samples)
      throw Error(ErrorKind::kShape, "turn runs past the meeting end");
    std::copy(src.samples.begin(), src.samples.end(),
              out.audio.samples.begin() +
                  static_cast<std::ptrdiff_t>(turn.onset_sample));
    out.annotation.segments.push_back(
        {turn.speaker_id, plan.OnsetSeconds(turn),
         plan.OnsetSeconds(turn) + plan.DurationSeconds(turn)});
  }
  return out;
}

}  // namespace privfeat
