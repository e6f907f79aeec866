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

#ifndef GLADIATOR_PARALLEL_HPP_
#define GLADIATOR_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace gladiator {

// Worker count from GLADIATOR_THREADS; 0 or unset means hardware concurrency.
int configured_workers();

// Splits [0, count) into contiguous chunks, one per worker, and calls
// body(begin, end, chunk_index). Chunk boundaries depend only on `count` and
// `workers`, so callers that reduce per-chunk results in chunk order get the
// same answer for every schedule.
void parallel_chunks(
    std::int64_t count, int workers,
    const std::function<void(std::int64_t, std::int64_t, int)>& body);

}  // namespace gladiator

#endif  // GLADIATOR_PARALLEL_HPP_
