// rydoa - robust DoA estimation from magnitude-only atomic-receiver measurements
// Copyright (C) 2026 the rydoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <functional>

namespace rydoa {

/// Worker count from the RYDOA_THREADS environment variable.
/// 0, unset, or unparsable means hardware concurrency.
int worker_count();

/// Runs fn(0) .. fn(n-1) on up to `workers` threads (0 = worker_count()).
/// Tasks must write only to disjoint, preallocated slots; the result is then
/// identical for any worker count or schedule. Exceptions thrown by tasks
/// are collected and the first one is rethrown after all threads join.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace rydoa
