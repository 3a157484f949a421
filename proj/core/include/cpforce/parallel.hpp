// Copyright 2026 The cpforce Authors
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

namespace cpforce {

/// Number of workers from the CPFORCE_WORKERS environment variable; 1 when
/// unset or unparsable, capped at the hardware concurrency times four.
unsigned workers_from_environment();

/// Runs fn(i) for i in [0, n) on up to `workers` threads. The first exception
/// thrown by any invocation is rethrown on the calling thread after all
/// workers have joined.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace cpforce
