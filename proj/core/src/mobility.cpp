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

#include "beamtrack/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamtrack {

double MobilityModel::aoa_drift_at(int slot) const {
  for (const auto& seg : aoa_drift) {
    if (slot >= seg.begin_slot && slot < seg.end_slot) {
      return seg.drift_deg_per_frame;
    }
  }
  return 0.0;
}

MobilityModel MobilityModel::model1() {
  MobilityModel m;
  m.kind = MobilityKind::kModel1;
  m.aod_drift_deg = 10.0;
  m.aoa_drift = {DriftSegment{1, std::numeric_limits<int>::max(), 10.0}};
  m.noise_var_deg2 = 1e-4;
  return m;
}

MobilityModel MobilityModel::model2() {
  MobilityModel m;
  m.kind = MobilityKind::kModel2;
  m.aod_drift_deg = 5.0;
  m.aoa_drift = {DriftSegment{1, 2000, 15.0}, DriftSegment{2000, 4000, -5.0},
                 DriftSegment{4000, std::numeric_limits<int>::max(), 1.0}};
  m.noise_var_deg2 = 1e-4;
  return m;
}

MobilityModel MobilityModel::static_channel() {
  MobilityModel m;
  m.kind = MobilityKind::kStatic;
  m.aod_drift_deg = 0.0;
  m.aoa_drift = {DriftSegment{1, std::numeric_limits<int>::max(), 0.0}};
  m.noise_var_deg2 = 0.0;
  return m;
}

ChannelState step(const ChannelState& state, int slot,
                  const MobilityModel& model, Rng& rng) {
  if (model.frame_len < 1) {
    throw std::invalid_argument("mobility step: frame_len must be >= 1");
  }
  if (model.noise_var_deg2 < 0.0) {
    throw std::invalid_argument("mobility step: noise variance must be >= 0");
  }
  if (model.kind == MobilityKind::kStatic) {
    return state;
  }
  const double sigma_deg = std::sqrt(model.noise_var_deg2);
  const double aod_step = model.aod_drift_deg / model.frame_len;
  const double aoa_step = model.aoa_drift_at(slot) / model.frame_len;
  ChannelState out = state;
  for (auto& path : out.paths) {
    const double d_aod = aod_step + sigma_deg * rng.gaussian();
    const double d_aoa = aoa_step + sigma_deg * rng.gaussian();
    path.aod_rad =
        std::clamp(path.aod_rad + deg2rad(d_aod), -0.5 * kPi, 0.5 * kPi);
    path.aoa_rad =
        std::clamp(path.aoa_rad + deg2rad(d_aoa), -0.5 * kPi, 0.5 * kPi);
  }
  return out;
}

ChannelState redraw_gain_phase(const ChannelState& state, Rng& rng) {
  ChannelState out = state;
  for (auto& path : out.paths) {
    path.gain = std::polar(1.0, rng.uniform(-kPi, kPi));
  }
  return out;
}

}  // namespace beamtrack
