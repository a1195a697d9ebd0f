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

#include <cmath>
#include <cstdint>
#include <vector>

#include "beamtrack/simulator.hpp"

using namespace beamtrack;

namespace {

// Static channel pinned to angles lying on both the 256-point estimation
// grid (indices 160 and 112) and the 32-point sweep grid (indices 20 and
// 14), so every algorithm can hold the link exactly.
ExperimentConfig static_on_grid_config() {
  ExperimentConfig cfg;
  cfg.mobility = MobilityModel::static_channel();
  cfg.snr_db = {40.0};
  cfg.initial_aod_deg = 22.5;
  cfg.initial_aoa_deg = -11.25;
  cfg.tracking_periods = {560};  // fixed period regardless of deltas
  cfg.first_period = 560;
  cfg.mc_runs = 1;
  return cfg;
}

bool same_frame(const FrameResult& a, const FrameResult& b) {
  if (a.se_per_slot != b.se_per_slot || a.overhead != b.overhead ||
      a.aod_errors_deg != b.aod_errors_deg ||
      a.aoa_errors_deg != b.aoa_errors_deg ||
      a.events.size() != b.events.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    if (a.events[i].slot != b.events[i].slot ||
        a.events[i].period_slots != b.events[i].period_slots ||
        a.events[i].true_aod_rad != b.events[i].true_aod_rad ||
        a.events[i].true_aoa_rad != b.events[i].true_aoa_rad ||
        a.events[i].estimate.aod_rad != b.events[i].estimate.aod_rad ||
        a.events[i].estimate.aoa_rad != b.events[i].estimate.aoa_rad) {
      return false;
    }
  }
  return true;
}

bool same_row(const MetricsRow& a, const MetricsRow& b) {
  return a.algorithm == b.algorithm && a.schedule == b.schedule &&
         a.snr_db == b.snr_db && a.rmse_aod_deg == b.rmse_aod_deg &&
         a.rmse_aoa_deg == b.rmse_aoa_deg && a.mean_se == b.mean_se &&
         a.overhead == b.overhead && a.se_time_series == b.se_time_series;
}

}  // namespace

TEST_CASE("event costs and names") {
  CHECK(event_cost_slots(Algorithm::kCs) == 45);
  CHECK(event_cost_slots(Algorithm::kPcs) == 20);
  CHECK(event_cost_slots(Algorithm::kBeamSweep) == 25);
  CHECK(algorithm_name(Algorithm::kCs) == "cs");
  CHECK(algorithm_name(Algorithm::kPcs) == "pcs");
  CHECK(algorithm_name(Algorithm::kBeamSweep) == "beamsweep");
  CHECK(schedule_name(Schedule::kAperiodic) == "aperiodic");
  CHECK(schedule_name(Schedule::kPeriodic) == "periodic");
}

TEST_CASE("spectral efficiency worked examples") {
  arma::cx_mat H1(1, 1);
  H1(0, 0) = {2.0, 0.0};
  arma::cx_vec one(1, arma::fill::ones);
  CHECK(spectral_efficiency(H1, one, one, 1.0) ==
        doctest::Approx(std::log2(5.0)).epsilon(1e-14));

  ArrayConfig array;
  ChannelState state;
  state.paths.push_back(PathState{{1.0, 0.0}, deg2rad(12.0), deg2rad(15.0)});
  const arma::cx_mat H = channel_matrix(state, array);
  const arma::cx_vec f = steering_vector(deg2rad(12.0), 32);
  const arma::cx_vec w = steering_vector(deg2rad(15.0), 32);
  CHECK(spectral_efficiency(H, f, w, 0.5) ==
        doctest::Approx(std::log2(1.0 + 1024.0 / 0.5)).epsilon(1e-12));
}

TEST_CASE("spectral efficiency validates inputs") {
  arma::cx_mat H(2, 2, arma::fill::ones);
  arma::cx_vec v2(2, arma::fill::ones);
  arma::cx_vec v3(3, arma::fill::ones);
  CHECK_THROWS_AS(spectral_efficiency(H, v2, v2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_efficiency(H, v3, v2, 1.0), std::invalid_argument);
}

TEST_CASE("static on-grid frame holds the matched-beam rate for every scheme") {
  const ExperimentConfig cfg = static_on_grid_config();
  const double noise_var = std::pow(10.0, -40.0 / 10.0);
  const double bound = std::log2(1.0 + 1024.0 / noise_var);

  for (Algorithm alg :
       {Algorithm::kCs, Algorithm::kPcs, Algorithm::kBeamSweep}) {
    CAPTURE(algorithm_name(alg));
    const FrameResult fr = run_frame(cfg, alg, 40.0, 0);
    const int m = event_cost_slots(alg);

    // Events every 560 slots while a full event still fits.
    std::vector<int> expected_slots;
    for (int s = 560; s + m - 1 <= cfg.frame_len; s += 560) {
      expected_slots.push_back(s);
    }
    REQUIRE(fr.events.size() == expected_slots.size());
    for (std::size_t i = 0; i < expected_slots.size(); ++i) {
      CHECK(fr.events[i].slot == expected_slots[i]);
      CHECK(fr.events[i].period_slots == 560);
      CHECK(std::abs(fr.aod_errors_deg[i]) < 1e-9);
      CHECK(std::abs(fr.aoa_errors_deg[i]) < 1e-9);
    }

    CHECK(fr.overhead == static_cast<double>(fr.events.size()) * m /
                             static_cast<double>(cfg.frame_len));

    std::vector<bool> tracking(static_cast<std::size_t>(cfg.frame_len), false);
    for (int s : expected_slots) {
      for (int k = s; k < s + m; ++k) {
        tracking[static_cast<std::size_t>(k - 1)] = true;
      }
    }
    for (int slot = 1; slot <= cfg.frame_len; ++slot) {
      const double se = fr.se_per_slot[static_cast<std::size_t>(slot - 1)];
      if (tracking[static_cast<std::size_t>(slot - 1)]) {
        CHECK(se == 0.0);
      } else {
        CHECK(se == bound);
      }
    }
  }
}

TEST_CASE("events that no longer fit are dropped at the frame edge") {
  ExperimentConfig cfg = static_on_grid_config();
  cfg.tracking_periods.clear();  // default ladder, t1 = 560

  cfg.frame_len = 604;  // 560 + 45 - 1 = 604: a cs event fits exactly
  const FrameResult fits = run_frame(cfg, Algorithm::kCs, 40.0, 0);
  REQUIRE(fits.events.size() == 1);
  CHECK(fits.events[0].slot == 560);
  CHECK(fits.se_per_slot[559] == 0.0);
  CHECK(fits.se_per_slot[603] == 0.0);
  CHECK(fits.se_per_slot[558] > 0.0);

  cfg.frame_len = 600;  // one slot short: the event must be skipped
  const FrameResult skipped = run_frame(cfg, Algorithm::kCs, 40.0, 0);
  CHECK(skipped.events.empty());
  CHECK(skipped.overhead == 0.0);
  for (double se : skipped.se_per_slot) {
    CHECK(se > 0.0);
  }
}

TEST_CASE("per-slot rate never exceeds the matched-beam bound") {
  ExperimentConfig cfg;
  cfg.mc_runs = 1;
  cfg.frame_len = 2000;
  const double noise_var = 1.0;  // 0 dB
  const double bound = std::log2(1.0 + 1024.0 / noise_var);
  const FrameResult fr = run_frame(cfg, Algorithm::kPcs, 0.0, 3);
  for (double se : fr.se_per_slot) {
    CHECK(se >= 0.0);
    CHECK(se <= bound + 1e-12);
  }
}

TEST_CASE("algorithms under one run index see the same truth") {
  ExperimentConfig cfg;
  cfg.mc_runs = 1;
  cfg.frame_len = 700;
  const FrameResult cs = run_frame(cfg, Algorithm::kCs, 0.0, 11);
  const FrameResult pcs = run_frame(cfg, Algorithm::kPcs, 0.0, 11);
  const FrameResult bsw = run_frame(cfg, Algorithm::kBeamSweep, 0.0, 11);
  REQUIRE(cs.events.size() >= 1);
  REQUIRE(pcs.events.size() >= 1);
  REQUIRE(bsw.events.size() >= 1);
  CHECK(cs.events[0].slot == 560);
  CHECK(pcs.events[0].slot == 560);
  CHECK(bsw.events[0].slot == 560);
  // Mobility and gain-phase draws live on their own streams, so the truth
  // snapshot at the shared first event is bit-identical across schemes.
  CHECK(cs.events[0].true_aod_rad == pcs.events[0].true_aod_rad);
  CHECK(cs.events[0].true_aoa_rad == pcs.events[0].true_aoa_rad);
  CHECK(cs.events[0].true_aod_rad == bsw.events[0].true_aod_rad);
  CHECK(cs.events[0].true_aoa_rad == bsw.events[0].true_aoa_rad);
}

TEST_CASE("run_frame is deterministic") {
  ExperimentConfig cfg;
  cfg.mc_runs = 1;
  cfg.frame_len = 700;
  const FrameResult a = run_frame(cfg, Algorithm::kPcs, -5.0, 2);
  const FrameResult b = run_frame(cfg, Algorithm::kPcs, -5.0, 2);
  CHECK(same_frame(a, b));
  const FrameResult c = run_frame(cfg, Algorithm::kPcs, -5.0, 3);
  CHECK_FALSE(same_frame(a, c));
}

TEST_CASE("periodic schedule lays out the planned events") {
  ExperimentConfig cfg = static_on_grid_config();
  cfg.tracking_periods.clear();
  cfg.schedule = Schedule::kPeriodic;
  cfg.max_overhead = 0.05;
  const FrameResult fr = run_frame(cfg, Algorithm::kPcs, 40.0, 0);
  // floor(0.05*10000/20) = 25 rounds at period 280 from offset 1640.
  REQUIRE(fr.events.size() == 25);
  for (std::size_t i = 0; i < fr.events.size(); ++i) {
    CHECK(fr.events[i].slot == 1640 + static_cast<int>(i) * 280);
    CHECK(fr.events[i].period_slots == 280);
  }
  CHECK(fr.overhead == 25.0 * 20 / 10000.0);
  CHECK(fr.overhead <= cfg.max_overhead);
}

TEST_CASE("monte carlo table matches a hand fold of the same frames") {
  ExperimentConfig cfg;
  cfg.algorithms = {Algorithm::kCs};
  cfg.snr_db = {0.0, 5.0};
  cfg.mc_runs = 4;
  cfg.frame_len = 700;
  const MetricsTable table = run_monte_carlo(cfg, 1);
  REQUIRE(table.rows.size() == 2);

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const MetricsRow& row = table.rows[r];
    CHECK(row.algorithm == Algorithm::kCs);
    CHECK(row.schedule == Schedule::kAperiodic);
    CHECK(row.snr_db == cfg.snr_db[r]);

    double sq_aod = 0.0;
    double sq_aoa = 0.0;
    std::size_t events = 0;
    double se_sum = 0.0;
    double overhead_sum = 0.0;
    std::vector<double> series(static_cast<std::size_t>(cfg.frame_len), 0.0);
    for (int run = 0; run < cfg.mc_runs; ++run) {
      const FrameResult fr = run_frame(cfg, Algorithm::kCs, cfg.snr_db[r],
                                       static_cast<std::uint64_t>(run));
      for (double e : fr.aod_errors_deg) sq_aod += e * e;
      for (double e : fr.aoa_errors_deg) sq_aoa += e * e;
      events += fr.events.size();
      for (std::size_t k = 0; k < series.size(); ++k) {
        series[k] += fr.se_per_slot[k];
        se_sum += fr.se_per_slot[k];
      }
      overhead_sum += fr.overhead;
    }
    REQUIRE(events > 0);
    CHECK(row.rmse_aod_deg == std::sqrt(sq_aod / static_cast<double>(events)));
    CHECK(row.rmse_aoa_deg == std::sqrt(sq_aoa / static_cast<double>(events)));
    CHECK(row.mean_se ==
          se_sum / (static_cast<double>(cfg.mc_runs) * cfg.frame_len));
    CHECK(row.overhead == overhead_sum / static_cast<double>(cfg.mc_runs));
    for (std::size_t k = 0; k < series.size(); ++k) {
      CHECK(row.se_time_series[k] ==
            series[k] / static_cast<double>(cfg.mc_runs));
    }
  }
}

TEST_CASE("monte carlo results do not depend on the worker count") {
  ExperimentConfig cfg;
  cfg.algorithms = {Algorithm::kPcs};
  cfg.snr_db = {0.0};
  cfg.mc_runs = 5;
  cfg.frame_len = 700;
  const MetricsTable t1 = run_monte_carlo(cfg, 1);
  const MetricsTable t3 = run_monte_carlo(cfg, 3);
  REQUIRE(t1.rows.size() == t3.rows.size());
  for (std::size_t i = 0; i < t1.rows.size(); ++i) {
    CHECK(same_row(t1.rows[i], t3.rows[i]));
  }
}

TEST_CASE("effective rate takes the best schedule for each load") {
  const std::vector<EsePair> pairs = {{8.0, 0.02}, {6.0, 0.01}};
  CHECK(effective_se(pairs, 0) == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(effective_se(pairs, 1) == doctest::Approx(8.0 * 0.98).epsilon(1e-14));
  // At 30 users the low-overhead point wins: 8*0.4 = 3.2 < 6*0.7 = 4.2.
  CHECK(effective_se(pairs, 30) == doctest::Approx(4.2).epsilon(1e-14));
  CHECK(effective_se(pairs, 200) == 0.0);
  CHECK_THROWS_AS(effective_se({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(effective_se(pairs, -1), std::invalid_argument);
}

TEST_CASE("experiment validation rejects inconsistent settings") {
  ExperimentConfig good;
  CHECK_NOTHROW(validate(good));

  ExperimentConfig cfg = good;
  cfg.algorithms.clear();
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.snr_db.clear();
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.mc_runs = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.frame_len = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.gamma_max_deg = 0.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.initial_direction_sign = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.initial_aod_deg = 95.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.schedule = Schedule::kPeriodic;
  cfg.max_overhead = 1.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.first_period = 100;  // not in the default ladder
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);

  cfg = good;
  cfg.mobility.frame_len = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}
