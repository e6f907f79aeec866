// Copyright 2026 The Gladiator Authors
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

#include "gladiator/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace gladiator {

int configured_workers() {
  int requested = 0;
  if (const char* env = std::getenv("GLADIATOR_THREADS")) {
    requested = std::atoi(env);
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(
    std::int64_t count, int workers,
    const std::function<void(std::int64_t, std::int64_t, int)>& body) {
  if (count <= 0) return;
  workers = std::max(1, workers);
  workers = static_cast<int>(std::min<std::int64_t>(workers, count));
  if (workers == 1) {
    body(0, count, 0);
    return;
  }
  const std::int64_t per = count / workers;
  const std::int64_t extra = count % workers;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  threads.reserve(static_cast<size_t>(workers));
  std::int64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t end = begin + per + (w < extra ? 1 : 0);
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace gladiator
