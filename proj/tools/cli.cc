// privfeat/tools/cli.cc

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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "privfeat/error.h"

namespace privfeat::cli {

namespace {

std::string Strip(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Turns `--config FILE` into `--key=value` tokens placed right after the
// subcommand name, ahead of the user's own flags. Options take the last
// value given, so explicit flags override the file. A `command` key, as
// written to run_config.txt, is checked against the subcommand.
std::vector<std::string> ExpandConfig(const std::vector<std::string> &args) {
  std::vector<std::string> out;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (config_path.empty() || out.size() < 2) return out;
  const RunConfig cfg = RunConfig::Read(config_path);
  std::vector<std::string> injected;
  for (const auto &[key, value] : cfg.entries()) {
    // Written run configs record the subcommand; it must agree.
    if (key == "command") {
      if (value != out[1])
        throw Error(ErrorKind::kConfig, config_path + " is for command '" +
                                            value + "', not '" + out[1] + "'");
      continue;
    }
    injected.push_back("--" + key + "=" + value);
  }
  out.insert(out.begin() + 2, injected.begin(), injected.end());
  return out;
}

}  // namespace

void RunConfig::Write(const std::filesystem::path &path) const {
  std::ofstream os(path);
  if (!os) throw Error(ErrorKind::kIo, "cannot write " + path.string());
  for (const auto &[key, value] : entries_) os << key << '=' << value << '\n';
}

RunConfig RunConfig::Read(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  RunConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    line = Strip(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::kParse, path.string() + " line " +
                                         std::to_string(line_no) +
                                         ": expected key=value");
    cfg.entries_.emplace_back(Strip(line.substr(0, eq)),
                              Strip(line.substr(eq + 1)));
  }
  return cfg;
}

std::string RunConfig::FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)> &fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

std::vector<std::string> ReadListFile(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<std::string> out;
  for (std::string line; std::getline(is, line);) {
    line = Strip(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::filesystem::path PrepareOutDir(const std::string &flag_value) {
  std::filesystem::path dir = flag_value;
  if (dir.empty()) {
    const char *env = std::getenv(kOutDirEnv);
    dir = env && *env ? env : ".";
  }
  std::filesystem::create_directories(dir);
  return dir;
}

int RunCli(const std::vector<std::string> &raw_args) {
  CLI::App app{"privfeat: privacy-preserving speech features, McAdams "
               "anonymization, meeting simulation and scoring"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::map<CLI::App *, CommandRunner> runners;
  auto add = [&](CommandRunner (*register_fn)(CLI::App &), const char *name) {
    CommandRunner r = register_fn(app);
    runners[app.get_subcommand(name)] = std::move(r);
  };
  add(&AddFeaturizeCommand, "featurize");
  add(&AddAnonymizeCommand, "anonymize");
  add(&AddSimulateCommand, "simulate");
  add(&AddScoreCommand, "score");
  for (auto &[sub, runner] : runners)
    sub->add_option("--config", "flat key=value file with option defaults");

  try {
    std::vector<std::string> args = ExpandConfig(raw_args);
    std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
    app.parse(rev);
  } catch (const CLI::ParseError &e) {
    return app.exit(e);
  } catch (const Error &e) {
    std::cerr << "ERROR (privfeat) " << e.what() << '\n';
    return 2;
  }

  for (auto &[sub, runner] : runners) {
    if (!sub->parsed()) continue;
    try {
      return runner();
    } catch (const std::exception &e) {
      std::cerr << "ERROR (privfeat) " << e.what() << '\n';
      return 1;
    }
  }
  return 1;
}

}  // namespace privfeat::cli
