// Copyright 2026 The hsickit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace hsickit {

/// Hardware concurrency, at least 1.
unsigned default_thread_count() noexcept;

/// Calls body(i) for every i in [0, count), spread over up to `threads`
/// workers in contiguous chunks. Each index is visited exactly once, so any
/// body that only writes slot i produces schedule-independent output. The
/// first exception thrown by a body is rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace hsickit
