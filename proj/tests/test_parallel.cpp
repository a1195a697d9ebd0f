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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <stdexcept>
#include <vector>

#include "beamtrack/parallel.hpp"

using namespace beamtrack;

TEST_CASE("every index runs exactly once for any worker count") {
  for (unsigned threads : {0u, 1u, 2u, 3u, 16u}) {
    CAPTURE(threads);
    const std::size_t count = 101;
    std::vector<std::atomic<int>> hits(count);
    for (auto& h : hits) {
      h.store(0);
    }
    parallel_for(count, threads, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (std::size_t i = 0; i < count; ++i) {
      CHECK(hits[i].load() == 1);
    }
  }
}

TEST_CASE("zero items is a no-op") {
  bool touched = false;
  parallel_for(0, 4, [&](std::size_t) { touched = true; });
  CHECK_FALSE(touched);
}

TEST_CASE("more workers than items still covers all items") {
  std::vector<std::atomic<int>> hits(3);
  for (auto& h : hits) {
    h.store(0);
  }
  parallel_for(3, 64, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (auto& h : hits) {
    CHECK(h.load() == 1);
  }
}

TEST_CASE("worker exceptions reach the caller") {
  for (unsigned threads : {1u, 4u}) {
    CAPTURE(threads);
    std::atomic<int> done{0};
    CHECK_THROWS_AS(parallel_for(100, threads,
                                 [&](std::size_t i) {
                                   if (i == 17) {
                                     throw std::runtime_error("boom");
                                   }
                                   done.fetch_add(1);
                                 }),
                    std::runtime_error);
    CHECK(done.load() <= 99);
  }
}
