// privfeat/tools/cli.h

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

#ifndef PRIVFEAT_TOOLS_CLI_H_
#define PRIVFEAT_TOOLS_CLI_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace CLI {
class App;
}

namespace privfeat::cli {

/// Entry point shared by the `privfeat` binary and the tests. args[0] is the
/// program name. Returns the process exit code.
int RunCli(const std::vector<std::string> &args);

// ---------------------------------------------------------------------------
// Plumbing shared by the subcommands.

/// Environment variable naming the default output directory.
inline constexpr const char *kOutDirEnv = "PRIVFEAT_OUT_DIR";

/// Flat `key=value` run configuration, in insertion order.
class RunConfig {
 public:
  template <typename T>
  void Set(const std::string &key, const T &value) {
    if constexpr (std::is_same_v<T, bool>)
      entries_.emplace_back(key, value ? "true" : "false");
    else if constexpr (std::is_arithmetic_v<T>)
      entries_.emplace_back(key, FormatNumber(static_cast<double>(value)));
    else
      entries_.emplace_back(key, std::string(value));
  }
  const std::vector<std::pair<std::string, std::string>> &entries() const {
    return entries_;
  }
  void Write(const std::filesystem::path &path) const;

  /// Parses `key=value` lines; '#' starts a comment line.
  static RunConfig Read(const std::filesystem::path &path);

 private:
  static std::string FormatNumber(double v);
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Exceptions from fn
/// must be handled inside it.
void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)> &fn);

/// Reads a list file: one entry per line, blank lines and '#' comments
/// skipped, surrounding whitespace removed.
std::vector<std::string> ReadListFile(const std::filesystem::path &path);

/// Resolves the output directory (flag, then environment, then ".") and
/// creates it.
std::filesystem::path PrepareOutDir(const std::string &flag_value);

// Subcommand registration. Each returns a callable that runs the command
// after parsing and yields the exit code.
using CommandRunner = std::function<int()>;
CommandRunner AddFeaturizeCommand(CLI::App &app);
CommandRunner AddAnonymizeCommand(CLI::App &app);
CommandRunner AddSimulateCommand(CLI::App &app);
CommandRunner AddScoreCommand(CLI::App &app);

}  // namespace privfeat::cli

#endif  // PRIVFEAT_TOOLS_CLI_H_
