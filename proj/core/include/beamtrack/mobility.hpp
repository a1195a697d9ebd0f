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

#ifndef BEAMTRACK_MOBILITY_HPP
#define BEAMTRACK_MOBILITY_HPP

#include <limits>
#include <vector>

#include "beamtrack/array.hpp"
#include "beamtrack/rng.hpp"

namespace beamtrack {

enum class MobilityKind { kModel1, kModel2, kStatic };

// Per-frame AoA drift rate over a half-open slot range [begin, end).
struct DriftSegment {
  int begin_slot = 1;
  int end_slot = std::numeric_limits<int>::max();
  double drift_deg_per_frame = 0.0;
};

// Slotwise angle evolution: each slot adds drift/frame_len plus i.i.d.
// gaussian jitter of variance noise_var_deg2 (degrees squared) to each
// angle, clamped to [-pi/2, pi/2]. AoD drifts at a constant rate; AoA drift
// may change rate piecewise over the frame.
struct MobilityModel {
  MobilityKind kind = MobilityKind::kModel1;
  double aod_drift_deg = 10.0;        // degrees per frame
  std::vector<DriftSegment> aoa_drift;
  double noise_var_deg2 = 1e-4;
  int frame_len = 10000;              // drift normalization denominator

  double aoa_drift_at(int slot) const;

  // Constant drift on both angles (10 degrees per frame).
  static MobilityModel model1();
  // Slow AoD (5 deg/frame), AoA direction changes: +15 deg/frame on slots
  // [1, 2000), -5 on [2000, 4000), +1 from slot 4000 on.
  static MobilityModel model2();
  // No drift, no jitter; step() leaves the state untouched.
  static MobilityModel static_channel();
};

// Advance all path angles by one slot. Draw order per path: AoD jitter,
// then AoA jitter. The static model consumes no draws.
ChannelState step(const ChannelState& state, int slot,
                  const MobilityModel& model, Rng& rng);

// Replace every path gain with e^{j psi}, psi uniform on [-pi, pi).
ChannelState redraw_gain_phase(const ChannelState& state, Rng& rng);

}  // namespace beamtrack

#endif  // BEAMTRACK_MOBILITY_HPP
