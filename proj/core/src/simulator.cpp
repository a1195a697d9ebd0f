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

#include "beamtrack/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "beamtrack/parallel.hpp"
#include "beamtrack/rng.hpp"

namespace beamtrack {

int event_cost_slots(Algorithm alg) {
  switch (alg) {
    case Algorithm::kCs:
      return kCsMeasurements;
    case Algorithm::kPcs:
      return kPcsMeasurements;
    case Algorithm::kBeamSweep:
      return kBeamSweepMeasurements;
  }
  throw std::invalid_argument("event_cost_slots: unknown algorithm");
}

std::string algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kCs:
      return "cs";
    case Algorithm::kPcs:
      return "pcs";
    case Algorithm::kBeamSweep:
      return "beamsweep";
  }
  throw std::invalid_argument("algorithm_name: unknown algorithm");
}

std::string schedule_name(Schedule schedule) {
  switch (schedule) {
    case Schedule::kAperiodic:
      return "aperiodic";
    case Schedule::kPeriodic:
      return "periodic";
  }
  throw std::invalid_argument("schedule_name: unknown schedule");
}

void validate(const ExperimentConfig& cfg) {
  validate(cfg.array);
  if (cfg.algorithms.empty()) {
    throw std::invalid_argument("config: algorithm list must not be empty");
  }
  if (cfg.snr_db.empty()) {
    throw std::invalid_argument("config: snr list must not be empty");
  }
  if (cfg.mc_runs < 1) {
    throw std::invalid_argument("config: mc_runs must be >= 1");
  }
  if (cfg.frame_len < 1) {
    throw std::invalid_argument("config: frame_len must be >= 1");
  }
  if (cfg.gamma_max_deg <= 0.0) {
    throw std::invalid_argument("config: gamma_max_deg must be > 0");
  }
  if (cfg.initial_direction_sign != 1 && cfg.initial_direction_sign != -1) {
    throw std::invalid_argument("config: initial_direction_sign must be +1 or -1");
  }
  if (std::abs(cfg.initial_aod_deg) > 90.0 || std::abs(cfg.initial_aoa_deg) > 90.0) {
    throw std::invalid_argument("config: initial angles must lie in [-90, 90] degrees");
  }
  if (cfg.schedule == Schedule::kPeriodic &&
      (cfg.max_overhead <= 0.0 || cfg.max_overhead >= 1.0)) {
    throw std::invalid_argument("config: o_max must lie in (0, 1)");
  }
  if (cfg.mobility.frame_len < 1) {
    throw std::invalid_argument("config: mobility frame_len must be >= 1");
  }
  if (cfg.mobility.noise_var_deg2 < 0.0) {
    throw std::invalid_argument("config: mobility noise variance must be >= 0");
  }
  if (cfg.schedule == Schedule::kAperiodic) {
    const std::vector<int>& periods = cfg.tracking_periods.empty()
                                          ? default_tracking_periods()
                                          : cfg.tracking_periods;
    if (std::find(periods.begin(), periods.end(), cfg.first_period) ==
        periods.end()) {
      throw std::invalid_argument("config: t1 must be a member of the period set");
    }
  }
}

double spectral_efficiency(const arma::cx_mat& H, const arma::cx_vec& f_data,
                           const arma::cx_vec& w_data, double noise_var) {
  if (noise_var <= 0.0) {
    throw std::invalid_argument("spectral_efficiency: noise_var must be > 0");
  }
  const std::complex<double> val = beamform(w_data, H, f_data);
  return std::log2(1.0 + std::norm(val) / noise_var);
}

namespace {

// A scan center whose shifted triplet straddles an array endfire makes two
// triplet columns coincide (sin mirror symmetry about +-pi/2), which the
// projection rejects. Reachable at low SNR, where the previous estimate can
// land anywhere on the codebook. Retry with both centers moved one codebook
// step toward broadside; one step clears the mirror condition, and the
// displacement is far below the triplet span, so the scanned neighborhood is
// effectively unchanged.
Sounder pcs_sounder_robust(TrackerSide bs, TrackerSide ms,
                           const ArrayConfig& array,
                           const arma::cx_mat& base_precoders,
                           const arma::cx_mat& base_combiners) {
  const double step_bs = kPi / array.q_bs;
  const double step_ms = kPi / array.q_ms;
  for (int attempt = 0;; ++attempt) {
    try {
      return pcs_sounder(bs, ms, array, base_precoders, base_combiners);
    } catch (const DegenerateGeometryError&) {
      if (attempt >= 8) {
        throw;
      }
      bs.angle_rad -= bs.angle_rad >= 0.0 ? step_bs : -step_bs;
      ms.angle_rad -= ms.angle_rad >= 0.0 ? step_ms : -step_ms;
    }
  }
}

// Post-beamforming SE for a single unit-gain path with pure steering beams.
// |w^H H f| factorizes into the two normalized array correlations, so the
// per-slot value needs no matrix products.
double data_slot_se(double est_aod_rad, double est_aoa_rad,
                    const PathState& path, const ArrayConfig& array,
                    double noise_var) {
  const double d_bs = steering_correlation(est_aod_rad, path.aod_rad, array.n_bs);
  const double d_ms = steering_correlation(est_aoa_rad, path.aoa_rad, array.n_ms);
  const double gain2 = static_cast<double>(array.n_bs) * array.n_ms *
                       (d_bs * d_bs) * (d_ms * d_ms);
  return std::log2(1.0 + gain2 / noise_var);
}

}  // namespace

FrameResult run_frame(const ExperimentConfig& cfg, Algorithm alg,
                      double snr_db, std::uint64_t run_index) {
  validate(cfg);
  const double noise_var = std::pow(10.0, -snr_db / 10.0);
  const int m = event_cost_slots(alg);

  Rng sounder_rng(derive_seed(cfg.seed, run_index, RngStream::kSounder));
  Rng noise_rng(derive_seed(cfg.seed, run_index, RngStream::kNoise));
  Rng mobility_rng(derive_seed(cfg.seed, run_index, RngStream::kMobility));
  Rng gain_rng(derive_seed(cfg.seed, run_index, RngStream::kGainPhase));

  // The random sounders are fixed per frame: both ends derive them from the
  // seed exchanged during initial access, so every tracking event reuses the
  // same matrices. The projected scheme reuses the first base sequences of
  // the same pseudo-random pool.
  arma::cx_mat f_cs;
  arma::cx_mat w_cs;
  if (alg == Algorithm::kCs || alg == Algorithm::kPcs) {
    f_cs = random_qpsk_sounder(cfg.array.n_bs, kCsMeasurements, sounder_rng);
    w_cs = random_qpsk_sounder(cfg.array.n_ms, kCsMeasurements, sounder_rng);
  }
  arma::cx_mat base_f;
  arma::cx_mat base_w;
  if (alg == Algorithm::kPcs) {
    base_f = f_cs.cols(0, kPcsSequenceCount - 1);
    base_w = w_cs.cols(0, kPcsSequenceCount - 1);
  }

  const std::vector<double> grid_bs = codebook(cfg.array.q_bs);
  const std::vector<double> grid_ms = codebook(cfg.array.q_ms);

  ChannelState truth;
  truth.paths.push_back(PathState{{1.0, 0.0}, deg2rad(cfg.initial_aod_deg),
                                  deg2rad(cfg.initial_aoa_deg)});
  truth = redraw_gain_phase(truth, gain_rng);

  // Perfect estimates at slot 0.
  double est_aod = deg2rad(cfg.initial_aod_deg);
  double est_aoa = deg2rad(cfg.initial_aoa_deg);
  int dir_bs = cfg.initial_direction_sign;
  int dir_ms = cfg.initial_direction_sign;

  TrackerState tracker;
  tracker.period_slots = cfg.first_period;
  tracker.gamma_max_deg = cfg.gamma_max_deg;

  // Event start slots. Aperiodic mode extends the schedule one event at a
  // time; periodic mode lays the whole plan out up front.
  std::vector<int> fixed_events;
  int periodic_period = 0;
  if (cfg.schedule == Schedule::kPeriodic) {
    const PeriodicPlan plan =
        periodic_plan(cfg.max_overhead, m, cfg.frame_len, cfg.tracking_periods);
    periodic_period = plan.period_slots;
    for (int r = 0; r < plan.rounds; ++r) {
      const int start = plan.offset_slots + r * plan.period_slots;
      if (start >= 1) {
        fixed_events.push_back(start);
      }
    }
  }
  std::size_t fixed_idx = 0;
  int next_event = cfg.schedule == Schedule::kAperiodic
                       ? cfg.first_period
                       : (fixed_events.empty() ? 0 : fixed_events[0]);

  FrameResult result;
  result.se_per_slot.assign(static_cast<std::size_t>(cfg.frame_len), 0.0);
  int tracking_until = 0;
  int events_done = 0;

  for (int slot = 1; slot <= cfg.frame_len; ++slot) {
    if (slot == next_event) {
      if (slot + m - 1 <= cfg.frame_len) {
        // Gain phase changes during the preceding data phase; the event sees
        // the angles of the last data slot, frozen for all m measurements.
        truth = redraw_gain_phase(truth, gain_rng);
        const PathState snapshot = truth.paths.front();
        const arma::cx_mat H = channel_matrix(truth, cfg.array);

        Estimate est;
        if (alg == Algorithm::kCs) {
          Sounder sounder;
          sounder.precoders = f_cs;
          sounder.combiners = w_cs;
          sounder.scheme = SounderScheme::kCs;
          const arma::cx_vec y = measure(H, sounder, noise_var, noise_rng);
          est = ml_angle_search(y, sounder, grid_bs, grid_ms, cfg.array);
        } else if (alg == Algorithm::kPcs) {
          const Sounder sounder =
              pcs_sounder_robust(TrackerSide{est_aod, dir_bs},
                                 TrackerSide{est_aoa, dir_ms}, cfg.array,
                                 base_f, base_w);
          const arma::cx_vec y = measure(H, sounder, noise_var, noise_rng);
          est = ml_angle_search(y, sounder, grid_bs, grid_ms, cfg.array);
        } else {
          const Sounder sounder = beamsweep_sounder(est_aod, est_aoa, cfg.array);
          const arma::cx_vec y = measure(H, sounder, noise_var, noise_rng);
          est = beamsweep_decision(y, sounder.sweep_aod, sounder.sweep_aoa,
                                   cfg.array);
        }

        dir_bs = direction_sign(est.aod_rad, est_aod);
        dir_ms = direction_sign(est.aoa_rad, est_aoa);

        int chosen_period = 0;
        if (cfg.schedule == Schedule::kAperiodic) {
          const double delta_deg =
              std::max(std::abs(rad2deg(est.aod_rad - est_aod)),
                       std::abs(rad2deg(est.aoa_rad - est_aoa)));
          chosen_period = next_period(tracker, delta_deg, cfg.tracking_periods);
          tracker.before_previous = tracker.previous;
          tracker.previous = est;
          tracker.period_slots = chosen_period;
          next_event = slot + chosen_period;
        } else {
          chosen_period = periodic_period;
          ++fixed_idx;
          next_event =
              fixed_idx < fixed_events.size() ? fixed_events[fixed_idx] : 0;
        }

        TrackingEvent event;
        event.slot = slot;
        event.estimate = est;
        event.true_aod_rad = snapshot.aod_rad;
        event.true_aoa_rad = snapshot.aoa_rad;
        event.period_slots = chosen_period;
        result.events.push_back(event);
        result.aod_errors_deg.push_back(rad2deg(est.aod_rad - snapshot.aod_rad));
        result.aoa_errors_deg.push_back(rad2deg(est.aoa_rad - snapshot.aoa_rad));

        est_aod = est.aod_rad;
        est_aoa = est.aoa_rad;
        tracking_until = slot + m - 1;
        ++events_done;
      } else {
        // Event does not fit before the frame ends; later ones cannot either.
        next_event = 0;
      }
    }

    truth = step(truth, slot, cfg.mobility, mobility_rng);
    if (slot > tracking_until) {
      result.se_per_slot[static_cast<std::size_t>(slot - 1)] = data_slot_se(
          est_aod, est_aoa, truth.paths.front(), cfg.array, noise_var);
    }
  }

  result.overhead =
      static_cast<double>(events_done) * m / static_cast<double>(cfg.frame_len);
  return result;
}

MetricsTable run_monte_carlo(const ExperimentConfig& cfg, unsigned threads) {
  validate(cfg);
  MetricsTable table;
  const std::size_t runs = static_cast<std::size_t>(cfg.mc_runs);
  const std::size_t slots = static_cast<std::size_t>(cfg.frame_len);

  for (Algorithm alg : cfg.algorithms) {
    for (double snr : cfg.snr_db) {
      std::vector<FrameResult> results(runs);
      parallel_for(runs, threads, [&](std::size_t i) {
        results[i] = run_frame(cfg, alg, snr, static_cast<std::uint64_t>(i));
      });

      MetricsRow row;
      row.algorithm = alg;
      row.schedule = cfg.schedule;
      row.snr_db = snr;
      row.se_time_series.assign(slots, 0.0);

      double sq_aod = 0.0;
      double sq_aoa = 0.0;
      std::size_t event_count = 0;
      double se_sum = 0.0;
      double overhead_sum = 0.0;
      for (const FrameResult& fr : results) {
        for (double e : fr.aod_errors_deg) {
          sq_aod += e * e;
        }
        for (double e : fr.aoa_errors_deg) {
          sq_aoa += e * e;
        }
        event_count += fr.events.size();
        for (std::size_t k = 0; k < slots; ++k) {
          row.se_time_series[k] += fr.se_per_slot[k];
          se_sum += fr.se_per_slot[k];
        }
        overhead_sum += fr.overhead;
      }
      if (event_count > 0) {
        sq_aod /= static_cast<double>(event_count);
        sq_aoa /= static_cast<double>(event_count);
      }
      row.rmse_aod_deg = std::sqrt(sq_aod);
      row.rmse_aoa_deg = std::sqrt(sq_aoa);
      row.mean_se = se_sum / (static_cast<double>(runs) * slots);
      row.overhead = overhead_sum / static_cast<double>(runs);
      for (double& v : row.se_time_series) {
        v /= static_cast<double>(runs);
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

double effective_se(const std::vector<EsePair>& pairs, int n_users) {
  if (pairs.empty()) {
    throw std::invalid_argument("effective_se: pair list must not be empty");
  }
  if (n_users < 0) {
    throw std::invalid_argument("effective_se: n_users must be >= 0");
  }
  double best = 0.0;
  for (const EsePair& p : pairs) {
    const double factor = std::max(0.0, 1.0 - n_users * p.max_overhead);
    best = std::max(best, factor * p.mean_se);
  }
  return best;
}

}  // namespace beamtrack
