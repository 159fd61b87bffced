// Copyright 2026 the amdlab authors
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

namespace amd {

// Process-wide cap on worker threads used by parallel_for. 0 (the initial
// value) means "use the hardware concurrency". The cap only changes how
// fast things run: every parallel caller writes results into per-index
// slots, so outputs are identical for any cap.
void set_max_threads(int threads);
int max_threads();

// Runs fn(0) .. fn(count-1), possibly from several threads, each index
// exactly once. fn must confine its writes to state owned by its index.
// The first exception thrown by any fn is rethrown to the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace amd
