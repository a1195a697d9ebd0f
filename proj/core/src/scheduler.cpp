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

#include "beamtrack/scheduler.hpp"

#include <algorithm>
#include <cmath>

namespace beamtrack {

namespace {

std::span<const int> resolve_periods(std::span<const int> periods) {
  if (periods.empty()) {
    const auto& d = default_tracking_periods();
    return {d.data(), d.size()};
  }
  if (!std::is_sorted(periods.begin(), periods.end()) || periods.front() < 1) {
    throw std::invalid_argument(
        "tracking periods must be positive and ascending");
  }
  return periods;
}

}  // namespace

const std::vector<int>& default_tracking_periods() {
  static const std::vector<int> set{70, 140, 280, 560, 1120, 2240, 4480, 8960};
  return set;
}

int direction_sign(double current_rad, std::optional<double> previous_rad) {
  if (!previous_rad.has_value()) {
    return +1;
  }
  return (current_rad - *previous_rad >= 0.0) ? +1 : -1;
}

int quantize_period(std::int64_t t_raw, std::span<const int> periods) {
  if (t_raw < 1) {
    throw std::invalid_argument("quantize_period: t_raw must be >= 1");
  }
  const auto set = resolve_periods(periods);
  for (std::size_t i = 0; i + 1 < set.size(); ++i) {
    const double midpoint = 0.5 * (set[i] + set[i + 1]);
    if (static_cast<double>(t_raw) < midpoint) {
      return set[i];
    }
  }
  return set.back();
}

int next_period(const TrackerState& state, double delta_deg,
                std::span<const int> periods) {
  if (delta_deg < 0.0 || !std::isfinite(delta_deg)) {
    throw std::invalid_argument("next_period: delta must be finite and >= 0");
  }
  if (state.gamma_max_deg <= 0.0) {
    throw std::invalid_argument("next_period: gamma_max must be > 0");
  }
  const auto set = resolve_periods(periods);
  if (delta_deg == 0.0) {
    return std::min(2 * state.period_slots, set.back());
  }
  const double raw =
      std::ceil(state.gamma_max_deg / delta_deg * state.period_slots);
  const double capped = std::min(raw, static_cast<double>(set.back()));
  return quantize_period(std::max<std::int64_t>(
                             1, static_cast<std::int64_t>(capped)),
                         set);
}

PeriodicPlan periodic_plan(double max_overhead, int slots_per_event,
                           int frame_len, std::span<const int> periods) {
  if (!(max_overhead > 0.0) || !(max_overhead < 1.0)) {
    throw std::invalid_argument("periodic_plan: max_overhead must be in (0,1)");
  }
  if (slots_per_event < 1 || frame_len < 1) {
    throw std::invalid_argument(
        "periodic_plan: slots_per_event and frame_len must be >= 1");
  }
  const auto set = resolve_periods(periods);
  const int rounds =
      static_cast<int>(std::floor(max_overhead * frame_len / slots_per_event));
  if (rounds == 0) {
    throw InfeasibleBudgetError(
        "periodic_plan: overhead budget below one tracking event");
  }
  int period = 0;
  for (auto it = set.rbegin(); it != set.rend(); ++it) {
    if (static_cast<std::int64_t>(rounds - 1) * (*it) <= frame_len) {
      period = *it;
      break;
    }
  }
  if (period == 0) {
    throw InfeasibleBudgetError(
        "periodic_plan: budgeted events do not fit in the frame at any "
        "admissible period");
  }
  PeriodicPlan plan;
  plan.rounds = rounds;
  plan.period_slots = period;
  plan.offset_slots = static_cast<int>(
      (frame_len - static_cast<std::int64_t>(rounds - 1) * period + 1) / 2);
  return plan;
}

}  // namespace beamtrack
