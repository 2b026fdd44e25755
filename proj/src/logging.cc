// privfeat/logging.cc

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

#include "privfeat/logging.h"

#include <iostream>
#include <mutex>
#include <utility>

namespace privfeat {

namespace {

std::mutex &SinkMutex() {
  static std::mutex m;
  return m;
}

LogSink &Sink() {
  static LogSink sink = [](LogLevel level, const std::string &message) {
    std::cerr << (level == LogLevel::kWarning ? "WARNING" : "LOG")
              << " (privfeat) " << message << '\n';
  };
  return sink;
}

void Emit(LogLevel level, const std::string &message) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  if (Sink()) Sink()(level, message);
}

}  // namespace

LogSink SetLogSink(LogSink sink) {
  std::lock_guard<std::mutex> lock(SinkMutex());
  return std::exchange(Sink(), std::move(sink));
}

void LogInfo(const std::string &message) { Emit(LogLevel::kInfo, message); }
void LogWarning(const std::string &message) {
  Emit(LogLevel::kWarning, message);
}

}  // namespace privfeat
