// Copyright 2026 The zkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zkit/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace zkit {

namespace {

int default_threads() {
  if (const char* env = std::getenv("ZKIT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<int>& configured() {
  static std::atomic<int> n{default_threads()};
  return n;
}

}  // namespace

int thread_count() { return configured().load(); }

void set_thread_count(int n) { configured().store(std::max(1, n)); }

}  // namespace zkit
