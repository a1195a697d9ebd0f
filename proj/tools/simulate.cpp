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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "beamtrack/config.hpp"
#include "beamtrack/io.hpp"
#include "beamtrack/simulator.hpp"
#include "beamtrack/version.hpp"

namespace {

std::string mobility_kind_name(beamtrack::MobilityKind kind) {
  switch (kind) {
    case beamtrack::MobilityKind::kModel1:
      return "model1";
    case beamtrack::MobilityKind::kModel2:
      return "model2";
    case beamtrack::MobilityKind::kStatic:
      return "static";
  }
  return "unknown";
}

nlohmann::ordered_json config_json(const beamtrack::ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["n_bs"] = cfg.array.n_bs;
  j["n_ms"] = cfg.array.n_ms;
  j["q_bs"] = cfg.array.q_bs;
  j["q_ms"] = cfg.array.q_ms;
  nlohmann::ordered_json algs = nlohmann::ordered_json::array();
  for (beamtrack::Algorithm alg : cfg.algorithms) {
    algs.push_back(beamtrack::algorithm_name(alg));
  }
  j["algorithms"] = algs;
  j["schedule"] = beamtrack::schedule_name(cfg.schedule);
  if (cfg.schedule == beamtrack::Schedule::kPeriodic) {
    j["o_max"] = cfg.max_overhead;
  }
  j["snr_db"] = cfg.snr_db;
  j["mc_runs"] = cfg.mc_runs;
  j["frame_len"] = cfg.frame_len;
  j["t1"] = cfg.first_period;
  j["gamma_max_deg"] = cfg.gamma_max_deg;
  j["init_aod_deg"] = cfg.initial_aod_deg;
  j["init_aoa_deg"] = cfg.initial_aoa_deg;
  j["initial_direction_sign"] = cfg.initial_direction_sign;
  nlohmann::ordered_json mob;
  mob["kind"] = mobility_kind_name(cfg.mobility.kind);
  mob["drift_aod_deg"] = cfg.mobility.aod_drift_deg;
  nlohmann::ordered_json segs = nlohmann::ordered_json::array();
  for (const beamtrack::DriftSegment& seg : cfg.mobility.aoa_drift) {
    nlohmann::ordered_json s;
    s["begin_slot"] = seg.begin_slot;
    if (seg.end_slot == std::numeric_limits<int>::max()) {
      s["end_slot"] = nullptr;
    } else {
      s["end_slot"] = seg.end_slot;
    }
    s["drift_deg_per_frame"] = seg.drift_deg_per_frame;
    segs.push_back(s);
  }
  mob["drift_aoa_segments"] = segs;
  mob["noise_var_deg2"] = cfg.mobility.noise_var_deg2;
  mob["frame_len"] = cfg.mobility.frame_len;
  j["mobility"] = mob;
  j["tracking_periods"] = cfg.tracking_periods.empty()
                              ? beamtrack::default_tracking_periods()
                              : cfg.tracking_periods;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-level mmWave beam tracking simulator"};

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int runs = 0;
  std::string algorithm;
  std::string schedule;
  double omax = -1.0;
  std::string snr;
  unsigned threads = 0;

  app.add_option("--config", config_path, "Experiment config file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory for CSVs and manifest")
      ->required();
  auto* seed_opt = app.add_option("--seed", seed, "Override the config seed");
  auto* runs_opt =
      app.add_option("--runs", runs, "Override the Monte Carlo run count");
  app.add_option("--algorithm", algorithm,
                 "Override algorithms: cs|pcs|beamsweep|all or comma list");
  app.add_option("--schedule", schedule, "Override schedule: aperiodic|periodic");
  auto* omax_opt =
      app.add_option("--omax", omax, "Override the periodic overhead budget");
  app.add_option("--snr", snr, "Override SNR list, comma-separated dB");
  app.add_option("--threads", threads,
                 "Worker threads (0 = hardware concurrency)");

  CLI11_PARSE(app, argc, argv);

  try {
    beamtrack::ExperimentConfig cfg = beamtrack::load_config_file(config_path);
    if (*seed_opt) {
      cfg.seed = seed;
    }
    if (*runs_opt) {
      cfg.mc_runs = runs;
    }
    if (!algorithm.empty()) {
      cfg.algorithms = beamtrack::parse_algorithm_list(algorithm);
    }
    if (!schedule.empty()) {
      cfg.schedule = beamtrack::parse_schedule(schedule);
    }
    if (*omax_opt) {
      cfg.max_overhead = omax;
    }
    if (!snr.empty()) {
      cfg.snr_db = beamtrack::parse_double_list(snr);
    }
    beamtrack::validate(cfg);

    const beamtrack::MetricsTable table = beamtrack::run_monte_carlo(cfg, threads);
    beamtrack::emit_results(table, out_dir);

    nlohmann::ordered_json manifest;
    manifest["version"] = beamtrack::kVersionString;
    manifest["seed"] = cfg.seed;
    manifest["config"] = config_json(cfg);
    manifest["outputs"] = {beamtrack::kMetricsFileName,
                           beamtrack::kTimeSeriesFileName};
    const std::filesystem::path manifest_path =
        std::filesystem::path(out_dir) / "manifest.json";
    std::ofstream manifest_out(manifest_path, std::ios::binary);
    if (!manifest_out) {
      throw std::runtime_error("failed to open " + manifest_path.string());
    }
    manifest_out << manifest.dump(2) << '\n';

    std::printf("%-10s %-10s %8s %14s %14s %10s %10s\n", "algorithm",
                "schedule", "snr_db", "rmse_aod_deg", "rmse_aoa_deg", "mean_se",
                "overhead");
    for (const beamtrack::MetricsRow& row : table.rows) {
      std::printf("%-10s %-10s %8.1f %14.4f %14.4f %10.4f %10.4f\n",
                  beamtrack::algorithm_name(row.algorithm).c_str(),
                  beamtrack::schedule_name(row.schedule).c_str(), row.snr_db,
                  row.rmse_aod_deg, row.rmse_aoa_deg, row.mean_se,
                  row.overhead);
    }
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
