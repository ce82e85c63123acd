// SPDX-License-Identifier: Apache-2.0
//
// ristwin - ray-traced digital twin for 1-bit RIS phase configuration
// Copyright (C) 2026 The ristwin authors
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

#include <cstddef>
#include <functional>

namespace ristwin
{

/// Number of workers for a `threads` request (<= 0 means hardware concurrency).
int resolve_threads(int threads);

/// Calls fn(i) for i in [0, count) on up to `threads` workers using static
/// contiguous blocks. fn must only write to per-index state. The first
/// exception thrown by any worker is rethrown after all workers joined.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &fn);

} // namespace ristwin
