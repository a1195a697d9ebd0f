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

#include <cstdint>
#include <string>
#include <vector>

#include "beamtrack/array.hpp"
#include "beamtrack/estimator.hpp"
#include "beamtrack/mobility.hpp"
#include "beamtrack/scheduler.hpp"
#include "beamtrack/sounder.hpp"

namespace beamtrack {

enum class Algorithm { kCs, kPcs, kBeamSweep };
enum class Schedule { kAperiodic, kPeriodic };

// Sounding slots consumed by one tracking event of each scheme.
inline constexpr int kCsMeasurements = 45;
inline constexpr int kPcsSequenceCount = 5;
inline constexpr int kPcsMeasurements = 20;
inline constexpr int kBeamSweepMeasurements = 25;

int event_cost_slots(Algorithm alg);
std::string algorithm_name(Algorithm alg);
std::string schedule_name(Schedule schedule);

// Full description of one experiment. Angles are degrees here (the natural
// unit for configuration files); the library converts to radians internally.
struct ExperimentConfig {
  ArrayConfig array;
  std::vector<Algorithm> algorithms = {Algorithm::kCs, Algorithm::kPcs,
                                       Algorithm::kBeamSweep};
  Schedule schedule = Schedule::kAperiodic;
  double max_overhead = 0.05;  // periodic schedule budget
  std::vector<double> snr_db = {0.0};
  MobilityModel mobility = MobilityModel::model1();
  int mc_runs = 300;
  std::uint64_t seed = 1;
  int frame_len = 10000;
  int first_period = 560;  // T1, slot of the first aperiodic event
  double gamma_max_deg = 2.5;
  double initial_aod_deg = 12.0;
  double initial_aoa_deg = 15.0;
  // Scan direction used before two estimates exist; the adaptation rule
  // needs a previous-difference sign that is undefined at the first event.
  int initial_direction_sign = 1;
  // Empty selects the default period set.
  std::vector<int> tracking_periods;
};

void validate(const ExperimentConfig& cfg);

struct TrackingEvent {
  int slot = 0;  // first slot occupied by the event
  Estimate estimate;
  double true_aod_rad = 0.0;  // truth snapshot seen by the estimator
  double true_aoa_rad = 0.0;
  int period_slots = 0;  // period scheduled after this event
};

struct FrameResult {
  std::vector<double> se_per_slot;  // [0] is slot 1; zero on tracking slots
  std::vector<TrackingEvent> events;
  double overhead = 0.0;
  std::vector<double> aod_errors_deg;  // signed, one entry per event
  std::vector<double> aoa_errors_deg;
};

// log2(1 + |w^H H f|^2 / noise_var). Throws std::invalid_argument when
// noise_var <= 0 or dimensions disagree.
double spectral_efficiency(const arma::cx_mat& H, const arma::cx_vec& f_data,
                           const arma::cx_vec& w_data, double noise_var);

// Simulates one frame of one Monte Carlo run. Generator streams for sounder
// construction, measurement noise, mobility, and gain phase are derived
// independently from (cfg.seed, run_index), so runs sharing the index see
// the same trajectory under every algorithm and SNR.
FrameResult run_frame(const ExperimentConfig& cfg, Algorithm alg,
                      double snr_db, std::uint64_t run_index);

struct MetricsRow {
  Algorithm algorithm = Algorithm::kCs;
  Schedule schedule = Schedule::kAperiodic;
  double snr_db = 0.0;
  double rmse_aod_deg = 0.0;
  double rmse_aoa_deg = 0.0;
  double mean_se = 0.0;
  double overhead = 0.0;
  std::vector<double> se_time_series;  // per-slot SE averaged over runs
};

struct MetricsTable {
  std::vector<MetricsRow> rows;
};

// Runs cfg.mc_runs frames per (algorithm, snr) cell. Monte Carlo runs
// execute on `threads` workers (0 = hardware concurrency); per-run results
// land in indexed slots and are reduced sequentially, so the table is
// bit-identical for any worker count.
MetricsTable run_monte_carlo(const ExperimentConfig& cfg, unsigned threads = 0);

struct EsePair {
  double mean_se = 0.0;
  double max_overhead = 0.0;
};

// max over pairs of (1 - n_users * o_max) * mean_se, factor clamped at 0.
double effective_se(const std::vector<EsePair>& pairs, int n_users);

}  // namespace beamtrack
