// privfeat/logging.h

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

#ifndef PRIVFEAT_LOGGING_H_
#define PRIVFEAT_LOGGING_H_

#include <functional>
#include <string>

namespace privfeat {

enum class LogLevel { kInfo, kWarning };

using LogSink = std::function<void(LogLevel, const std::string &)>;

/// Replaces the process-wide sink (default: stderr). Passing an empty
/// function silences the library. Returns the previous sink.
LogSink SetLogSink(LogSink sink);

void LogInfo(const std::string &message);
void LogWarning(const std::string &message);

}  // namespace privfeat

#endif  // PRIVFEAT_LOGGING_H_
