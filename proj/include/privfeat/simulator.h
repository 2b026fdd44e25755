// privfeat/simulator.h

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

#ifndef PRIVFEAT_SIMULATOR_H_
#define PRIVFEAT_SIMULATOR_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "privfeat/annotation.h"
#include "privfeat/audio.h"
#include "privfeat/random.h"

namespace privfeat {

// ---------------------------------------------------------------------------
// Endpoint trimming

struct TrimOptions {
  double threshold_db = 40.0;   // below the loudest frame's RMS
  double min_voiced_ms = 100.0; // shortest voiced run that counts as speech
  double window_ms = 25.0;
  double hop_ms = 10.0;
};

struct TrimResult {
  double start_offset_s = 0.0;  // removed from the front
  double end_offset_s = 0.0;    // removed from the back
  std::size_t start_sample = 0;
  std::size_t end_sample = 0;   // one past the last kept sample
  AudioSignal signal;
};

/// Frame-level RMS detection followed by sample-level refinement: the kept
/// span runs from the first sample with |x| >= threshold inside the first
/// qualifying voiced run to the last such sample inside the last run.
/// Throws kAllSilent if no run of at least min_voiced_ms exists.
TrimResult TrimSilence(const AudioSignal &signal, const TrimOptions &opts = {});

/// Scales the signal to the given RMS level in dBFS (no-op on silence).
void NormalizeRms(AudioSignal &signal, double target_dbfs);

// ---------------------------------------------------------------------------
// Pool and plans

struct PoolEntry {
  std::string speaker_id;
  std::string utterance_id;
  std::filesystem::path path;
  double duration_s = 0.0;
};

struct UtterancePool {
  std::vector<PoolEntry> entries;

  /// Speakers in order of first appearance.
  std::vector<std::string> Speakers() const;
  /// Throws kPool on duplicate utterance ids or non-positive durations.
  void Validate() const;
};

/// CSV with header `speaker_id,utterance_id,path`. Relative paths are
/// resolved against the manifest's directory. Durations are left at 0 until
/// the audio is loaded.
UtterancePool ReadPoolManifest(const std::filesystem::path &path);

/// Trimmed audio keyed by utterance id, with the pool durations set from the
/// trimmed lengths. All-silent utterances are dropped and logged.
struct LoadedPool {
  UtterancePool pool;
  std::map<std::string, AudioSignal> audio;
  std::vector<std::string> excluded;
};

LoadedPool LoadPool(const UtterancePool &manifest, const TrimOptions &trim,
                    bool normalize_gain = false,
                    double target_dbfs = -25.0);

struct PlanOptions {
  double gap_min_s = 0.1;
  double gap_max_s = 2.0;
  int sample_rate = kPipelineSampleRate;
};

struct TimelineEntry {
  std::string speaker_id;
  std::string utterance_id;
  std::int64_t onset_sample = 0;
  std::int64_t num_samples = 0;
};

struct MeetingPlan {
  std::string meeting_id;
  std::vector<std::string> participants;
  std::vector<TimelineEntry> timeline;  // onsets strictly increasing
  std::int64_t total_samples = 0;       // last end plus a trailing gap
  int sample_rate = kPipelineSampleRate;
  double gap_min_s = 0.0;
  double gap_max_s = 0.0;
  std::uint64_t seed = 0;

  double OnsetSeconds(const TimelineEntry &e) const {
    return static_cast<double>(e.onset_sample) / sample_rate;
  }
  double DurationSeconds(const TimelineEntry &e) const {
    return static_cast<double>(e.num_samples) / sample_rate;
  }
};

/// Turn loop over fixed participants: the next speaker is the one with the
/// least accumulated speech among those with utterances left, excluding the
/// previous speaker whenever someone else is available; ties are broken
/// uniformly with `rng`. Each speaker's utterances are drawn uniformly
/// without replacement until all are used, separated by uniform gaps.
MeetingPlan PlanTurns(const UtterancePool &pool,
                      const std::vector<std::string> &participants, Rng &rng,
                      const PlanOptions &opts = {});

/// Draws n_speakers (3 or 4) participants uniformly from the pool and runs
/// PlanTurns. Throws kPool if the pool has too few speakers, kConfig for
/// other meeting sizes.
MeetingPlan PlanMeeting(const UtterancePool &pool, int n_speakers, Rng &rng,
                        const PlanOptions &opts = {});

/// Partitions the pool's speakers into up to n_meetings disjoint groups of
/// 3 or 4 (so no utterance is reused) and plans each meeting with the seed
/// DeriveSeed(seed, meeting_index). Stops early when fewer than 3 speakers
/// remain.
std::vector<MeetingPlan> PlanMeetings(const UtterancePool &pool, int n_meetings,
                                      std::uint64_t seed,
                                      const PlanOptions &opts = {});

struct RenderedMeeting {
  AudioSignal audio;
  SegmentAnnotation annotation;
};

/// Copies each utterance to its onset over digital silence and emits one
/// reference segment per timeline entry. Throws kRate for audio at another
/// rate, kShape if an utterance's length differs from the plan.
RenderedMeeting RenderMeeting(const MeetingPlan &plan,
                              const std::map<std::string, AudioSignal> &audio);

}  // namespace privfeat

#endif  // PRIVFEAT_SIMULATOR_H_
