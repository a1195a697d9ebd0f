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

#ifndef BEAMTRACK_SCHEDULER_HPP
#define BEAMTRACK_SCHEDULER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "beamtrack/estimator.hpp"

namespace beamtrack {

// A periodic tracking budget too small for even a single event.
struct InfeasibleBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Admissible tracking periodicities (slots), ascending. Overridable per
// call for sensitivity studies; every scheduler output is a member.
const std::vector<int>& default_tracking_periods();

// sgn(current - previous) with sgn(0) = +1; +1 when there is no previous
// estimate yet.
int direction_sign(double current_rad, std::optional<double> previous_rad);

// Midpoint quantization onto the period set, lower-inclusive: raw values in
// [105, 210) map to 140 and so on; everything above the top midpoint maps
// to the largest member. t_raw must be >= 1.
int quantize_period(std::int64_t t_raw, std::span<const int> periods = {});

// Tracker memory between events: the two most recent estimates, the period
// currently in force, and the adaptation target gamma_max (degrees).
struct TrackerState {
  Estimate previous;
  std::optional<Estimate> before_previous;
  int period_slots = 560;
  double gamma_max_deg = 2.5;
};

// Period adaptation: delta_deg is the larger absolute change between
// consecutive AoD/AoA estimates, in degrees. delta == 0 doubles the period
// (capped at the largest member); otherwise the period rescales by
// gamma_max/delta and quantizes onto the set.
int next_period(const TrackerState& state, double delta_deg,
                std::span<const int> periods = {});

struct PeriodicPlan {
  int rounds = 0;        // R tracking events
  int period_slots = 0;  // T_x, member of the period set
  int offset_slots = 0;  // T_off before the first event
};

// Fixed-budget plan: R = floor(max_overhead*frame_len/slots_per_event)
// events at the largest admissible period whose R-1 repetitions fit in the
// frame, centered via the offset. Throws InfeasibleBudgetError when the
// budget cannot fund one event.
PeriodicPlan periodic_plan(double max_overhead, int slots_per_event,
                           int frame_len, std::span<const int> periods = {});

}  // namespace beamtrack

#endif  // BEAMTRACK_SCHEDULER_HPP
