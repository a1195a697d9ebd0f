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

#include <string>
#include <vector>

#include "beamtrack/simulator.hpp"

namespace beamtrack {

Algorithm parse_algorithm(const std::string& name);
// "all" expands to cs,pcs,beamsweep; otherwise a comma-separated subset.
std::vector<Algorithm> parse_algorithm_list(const std::string& names);
Schedule parse_schedule(const std::string& name);
std::vector<double> parse_double_list(const std::string& csv);
std::vector<int> parse_int_list(const std::string& csv);

// Flat `key = value` text; `#` starts a comment, blank lines are skipped,
// later assignments win. Unknown keys are errors. All angles in degrees.
//
//   n_bs, n_ms, q_bs, q_ms          array geometry and codebook sizes
//   algorithm                       cs | pcs | beamsweep | all | comma list
//   schedule                        aperiodic | periodic
//   o_max                           periodic overhead budget, fraction
//   snr_db                          comma-separated dB list
//   mc_runs, seed, frame_len, t1    integers
//   gamma_max_deg                   adaptation threshold
//   init_aod_deg, init_aoa_deg      truth at slot 0 (perfect estimates)
//   initial_direction_sign          +1 | -1, scan direction before history
//   mobility                        model1 | model2 | static
//   drift_aod_deg, drift_aoa_deg    degrees per frame (constant)
//   drift_aoa_segments              begin:end:drift;... (end may be "inf")
//   noise_var_deg2                  per-slot angle jitter variance
//   tracking_periods                comma-separated ascending slot counts
ExperimentConfig parse_config_text(const std::string& text);

ExperimentConfig load_config_file(const std::string& path);

}  // namespace beamtrack
