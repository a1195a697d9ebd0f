// SPDX-License-Identifier: Apache-2.0
//
// beamtrack: link-level mmWave beam tracking simulation library
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

namespace beamtrack {

// Runs fn(i) for i in [0, count) on a pool of worker threads. Work items are
// handed out through a shared atomic counter, so the assignment of items to
// threads is nondeterministic; callers that need reproducible results must
// write into per-index slots and reduce sequentially afterwards.
//
// threads == 0 picks the hardware concurrency. The first exception thrown by
// any worker is rethrown on the calling thread after all workers have joined.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace beamtrack
