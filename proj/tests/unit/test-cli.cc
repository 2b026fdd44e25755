// privfeat/tests/unit/test-cli.cc

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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "cli.h"
#include "doctest.h"
#include "fixtures.h"
#include "json.hpp"
#include "privfeat/annotation.h"
#include "privfeat/audio.h"
#include "privfeat/feature-io.h"

using namespace privfeat;
using namespace privfeat::testing;
using privfeat::cli::RunCli;

namespace {

int Run(std::vector<std::string> args) {
  args.insert(args.begin(), "privfeat");
  return RunCli(args);
}

std::string Slurp(const std::filesystem::path &p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), {}};
}

std::vector<std::vector<std::string>> Csv(const std::filesystem::path &p) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream is(p);
  for (std::string line; std::getline(is, line);) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

// Last CSV row whose second column is "ALL" (or the last row).
std::vector<std::string> Summary(const std::filesystem::path &p) {
  auto rows = Csv(p);
  for (auto it = rows.rbegin(); it != rows.rend(); ++it)
    if (it->size() > 1 && (*it)[1] == "ALL") return *it;
  return rows.back();
}

// Writes `count` distinct speech-like files and returns their paths.
std::vector<std::string> SpeechFiles(const TempDir &dir, int count, double seconds) {
  std::vector<std::string> paths;
  for (int i = 0; i < count; ++i) {
    const auto p = dir / ("utt" + std::to_string(i) + ".wav");
    WriteWav(SyntheticSpeech(seconds, 100 + i), p);
    paths.push_back(p.string());
  }
  return paths;
}

}  // namespace

TEST_CASE("featurize writes one matrix per file plus summary and config") {
  TempDir dir("cli-feat");
  const auto wavs = SpeechFiles(dir, 2, 1.0);
  const auto out = dir / "feats";
  REQUIRE(Run({"featurize", wavs[0], wavs[1], "--variant", "standard",
               "--n-mels", "80", "--out", out.string()}) == 0);
  const FeatureMatrix f =
      ReadFeatures(out / "utt0.standard.csv", FeatureFormat::kCsv);
  CHECK(f.num_mels() == 80);
  CHECK(f.num_frames() == (16000 - 400) / 160 + 1);
  const auto summary = Csv(out / "featurize_summary.csv");
  REQUIRE(summary.size() == 3);
  CHECK(summary[0][0] == "input");
  CHECK(summary[1][2] == std::to_string(f.num_frames()));
  CHECK(summary[1][3] == "80");
  CHECK(summary[1].back() == "ok");
  CHECK(std::filesystem::exists(out / "run_config.txt"));
  CHECK(Slurp(out / "run_config.txt").find("n-mels=80") != std::string::npos);
}

TEST_CASE("featurize olMEGA rows and n_mels independence") {
  TempDir dir("cli-olmega");
  const auto wavs = SpeechFiles(dir, 1, 1.37);
  for (const char *n : {"5", "80"})
    REQUIRE(Run({"featurize", wavs[0], "--variant", "olmega", "--n-mels", n,
                 "--format", "bin", "--out", (dir / n).string()}) == 0);
  const FeatureMatrix a = ReadFeatures(dir / "5" / "utt0.olmega.bin", FeatureFormat::kBinary);
  const FeatureMatrix b = ReadFeatures(dir / "80" / "utt0.olmega.bin", FeatureFormat::kBinary);
  CHECK(a.num_frames() % 10 == 0);
  CHECK(a.num_frames() == b.num_frames());
  CHECK(a.num_mels() == 5);
  CHECK(b.num_mels() == 80);
}

TEST_CASE("featurize exit codes for partial and total failure") {
  TempDir dir("cli-fail");
  const auto wavs = SpeechFiles(dir, 1, 0.5);
  const std::string missing = (dir / "missing.wav").string();
  CHECK(Run({"featurize", wavs[0], missing, "--out", (dir / "a").string()}) == 2);
  const auto summary = Csv(dir / "a" / "featurize_summary.csv");
  REQUIRE(summary.size() == 3);
  CHECK(summary[2].back().rfind("failed", 0) == 0);
  CHECK(Run({"featurize", missing, "--out", (dir / "b").string()}) == 1);
  CHECK(Run({"featurize", wavs[0], "--variant", "bogus"}) != 0);
  CHECK(Run({"nosuchcommand"}) != 0);
}

TEST_CASE("configuration files supply defaults that flags override") {
  TempDir dir("cli-config");
  const auto wavs = SpeechFiles(dir, 1, 0.5);
  {
    std::ofstream c(dir / "feat.conf");
    c << "# defaults\nn-mels=10\nvariant=olmega\nformat=bin\n";
  }
  REQUIRE(Run({"featurize", wavs[0], "--config", (dir / "feat.conf").string(),
               "--n-mels", "20", "--out", (dir / "o").string()}) == 0);
  const FeatureMatrix f = ReadFeatures(dir / "o" / "utt0.olmega.bin", FeatureFormat::kBinary);
  CHECK(f.num_mels() == 20);
  // The resolved config, fed back in, reproduces the run.
  REQUIRE(Run({"featurize", wavs[0], "--config", (dir / "o" / "run_config.txt").string(),
               "--out", (dir / "p").string()}) == 0);
  CHECK(Slurp(dir / "o" / "utt0.olmega.bin") == Slurp(dir / "p" / "utt0.olmega.bin"));
  CHECK(Run({"anonymize", wavs[0], "--config", (dir / "o" / "run_config.txt").string()}) == 2);
}

TEST_CASE("the output directory falls back to the environment") {
  TempDir dir("cli-env");
  const auto wavs = SpeechFiles(dir, 1, 0.5);
  const auto env_out = dir / "from-env";
  ::setenv(privfeat::cli::kOutDirEnv, env_out.string().c_str(), 1);
  const int rc = Run({"featurize", wavs[0]});
  ::unsetenv(privfeat::cli::kOutDirEnv);
  REQUIRE(rc == 0);
  CHECK(std::filesystem::exists(env_out / "utt0.standard.csv"));
}

TEST_CASE("anonymize: per-item seeds, reproducibility and parallel agreement") {
  TempDir dir("cli-anon");
  const auto wavs = SpeechFiles(dir, 3, 0.8);
  std::vector<std::string> base{"anonymize", wavs[0], wavs[1], wavs[2], "--seed", "7"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return a;
  };
  REQUIRE(Run(with({"--out", (dir / "r1").string(), "--jobs", "1"})) == 0);
  REQUIRE(Run(with({"--out", (dir / "r2").string(), "--jobs", "3"})) == 0);

  const auto manifest = Csv(dir / "r1" / "anonymize_manifest.csv");
  REQUIRE(manifest.size() == 4);
  CHECK(manifest[0] == std::vector<std::string>{"input_path", "output_path",
                                                "alpha_used", "seed"});
  std::set<std::string> seeds, alphas;
  for (std::size_t i = 1; i < manifest.size(); ++i) {
    seeds.insert(manifest[i][3]);
    alphas.insert(manifest[i][2]);
    const double alpha = std::stod(manifest[i][2]);
    CHECK(alpha >= 0.5);
    CHECK(alpha < 0.9);
  }
  CHECK(seeds.size() == 3);
  CHECK(alphas.size() == 3);
  for (int i = 0; i < 3; ++i) {
    const std::string name = "utt" + std::to_string(i) + ".wav";
    CHECK(Slurp(dir / "r1" / name) == Slurp(dir / "r2" / name));
  }
  const auto manifest2 = Csv(dir / "r2" / "anonymize_manifest.csv");
  REQUIRE(manifest2.size() == manifest.size());
  for (std::size_t i = 1; i < manifest.size(); ++i) {
    CHECK(manifest2[i][0] == manifest[i][0]);
    CHECK(manifest2[i][2] == manifest[i][2]);
    CHECK(manifest2[i][3] == manifest[i][3]);
  }
}

TEST_CASE("anonymize: fixed alpha of one is transparent") {
  TempDir dir("cli-anon-id");
  const auto wavs = SpeechFiles(dir, 1, 1.0);
  REQUIRE(Run({"anonymize", wavs[0], "--fixed-alpha", "1", "--out",
               (dir / "o").string()}) == 0);
  const AudioSignal in = ReadWav(wavs[0]);
  const AudioSignal out = ReadWav(dir / "o" / "utt0.wav");
  REQUIRE(out.size() == in.size());
  CHECK(SnrDb(in.samples, out.samples) > 40.0);
}

TEST_CASE("anonymize: meeting scope shares one alpha per group") {
  TempDir dir("cli-anon-mtg");
  const auto wavs = SpeechFiles(dir, 4, 0.5);
  {
    std::ofstream l(dir / "list.txt");
    l << wavs[0] << ",m1\n" << wavs[1] << ",m1\n" << wavs[2] << ",m2\n" << wavs[3] << ",m2\n";
  }
  REQUIRE(Run({"anonymize", "--list", (dir / "list.txt").string(), "--scope",
               "meeting", "--seed", "3", "--out", (dir / "o").string()}) == 0);
  const auto m = Csv(dir / "o" / "anonymize_manifest.csv");
  REQUIRE(m.size() == 5);
  CHECK(m[1][2] == m[2][2]);
  CHECK(m[3][2] == m[4][2]);
  CHECK(m[1][2] != m[3][2]);
}

TEST_CASE("simulate: reproducible meetings whose RTTM self-scores to zero") {
  TempDir dir("cli-sim");
  {
    std::ofstream pool(dir / "pool.csv");
    pool << "speaker_id,utterance_id,path\n";
    for (int s = 0; s < 8; ++s)
      for (int u = 0; u < 2; ++u) {
        const std::string id = "s" + std::to_string(s) + "u" + std::to_string(u);
        WriteWav(Concat({Silence(1600), SyntheticSpeech(1.0 + 0.2 * u, 10 * s + u),
                         Silence(800)}),
                 dir / (id + ".wav"));
        pool << "spk" << s << ',' << id << ',' << id << ".wav\n";
      }
  }
  for (const char *run : {"a", "b"})
    REQUIRE(Run({"simulate", "--pool", (dir / "pool.csv").string(), "--n-meetings", "2",
                 "--seed", "99", "--out", (dir / run).string()}) == 0);
  for (const char *f : {"meeting_000.wav", "meeting_000.rttm", "meeting_001.wav",
                        "meeting_001.rttm", "meetings.jsonl"})
    CHECK(Slurp(dir / "a" / f) == Slurp(dir / "b" / f));

  std::ifstream jl(dir / "a" / "meetings.jsonl");
  std::size_t used = 0;
  std::set<std::string> utterances;
  for (std::string line; std::getline(jl, line);) {
    const auto j = nlohmann::json::parse(line);
    const auto n = j["participants"].size();
    CHECK((n == 3 || n == 4));
    for (const auto &t : j["timeline"]) {
      CHECK(utterances.insert(t["utterance_id"].get<std::string>()).second);
      ++used;
    }
  }
  CHECK(used <= 16);

  const auto rttm = (dir / "a" / "meeting_000.rttm").string();
  REQUIRE(Run({"score", "--kind", "der", "--ref", rttm, "--hyp", rttm, "--report",
               (dir / "der.csv").string()}) == 0);
  const auto all = Summary(dir / "der.csv");
  CHECK(all.back() == "0.000000");
  CHECK(std::filesystem::exists(dir / "der.csv.config.txt"));

  CHECK(Run({"simulate", "--pool", (dir / "pool.csv").string(), "--n-meetings", "3",
             "--out", (dir / "c").string()}) != 0);  // only two disjoint groups fit
}

TEST_CASE("score: EER on the bundled trial fixture") {
  TempDir dir("cli-eer");
  const std::string fixtures = PRIVFEAT_FIXTURE_DIR;
  REQUIRE(Run({"score", "--kind", "eer", "--trials", fixtures + "/trials.txt",
               "--set", "fixture", "--report", (dir / "eer.csv").string()}) == 0);
  const auto rows = Csv(dir / "eer.csv");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == "fixture");
  CHECK(rows[1][1] == "60");
  CHECK(rows[1][2] == "140");

  std::ifstream exp(fixtures + "/trials.expected");
  std::map<std::string, double> expected;
  for (std::string k; exp >> k;) exp >> expected[k];
  CHECK(std::abs(std::stod(rows[1][3]) - expected["eer"]) <= 5e-7);
  CHECK(std::abs(std::stod(rows[1][4]) - expected["threshold"]) <= 1e-8);
}

TEST_CASE("score: weighted average, WER and MCC reports") {
  TempDir dir("cli-score");
  {
    std::ofstream a(dir / "avg.csv");
    a << "set,weight,value\nls-clean,0.25,7.53\nls-other,0.25,2.64\nvox,0.20,5.00\n"
         "ami,0.20,4.26\nvpc-a,0.05,2.62\nvpc-b,0.05,2.85\n";
    std::ofstream r(dir / "ref.txt");
    r << "u1\ta b c\nu2\tHello there\n";
    std::ofstream h(dir / "hyp.txt");
    h << "u1\ta x c d\n";
    std::ofstream lr(dir / "ref.lab");
    lr << "u1 1 1 0 0 1\n";
    std::ofstream lh(dir / "hyp.lab");
    lh << "u1 1 0 0 1 1\n";
  }
  REQUIRE(Run({"score", "--kind", "avg", "--input", (dir / "avg.csv").string(),
               "--report", (dir / "avg_out.csv").string()}) == 0);
  const auto avg = Csv(dir / "avg_out.csv").back();
  CHECK(avg[0] == "weighted_average");
  CHECK(std::abs(std::stod(avg[2]) - 4.67) <= 0.01);

  REQUIRE(Run({"score", "--kind", "wer", "--ref", (dir / "ref.txt").string(), "--hyp",
               (dir / "hyp.txt").string(), "--report", (dir / "wer.csv").string()}) == 0);
  const auto wer = Csv(dir / "wer.csv");
  REQUIRE(wer.size() == 4);
  CHECK(wer[1] == std::vector<std::string>{"all", "u1", "1", "1", "0", "3", "0.666667"});
  CHECK(wer[2][4] == "2");  // missing hypothesis: every word deleted
  CHECK(wer[3][1] == "ALL");
  CHECK(wer[3][6] == "0.800000");

  REQUIRE(Run({"score", "--kind", "mcc", "--ref", (dir / "ref.lab").string(), "--hyp",
               (dir / "hyp.lab").string(), "--report", (dir / "mcc.csv").string()}) == 0);
  const auto mcc = Summary(dir / "mcc.csv");
  CHECK(std::stod(mcc.back()) == doctest::Approx(1.0 / 6.0).epsilon(1e-5));

  CHECK(Run({"score", "--kind", "wer", "--ref", (dir / "ref.txt").string()}) == 1);
  CHECK(Run({"score", "--kind", "bleu"}) != 0);
}
