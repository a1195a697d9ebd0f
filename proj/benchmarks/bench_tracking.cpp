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

#include <benchmark/benchmark.h>

#include "beamtrack/estimator.hpp"
#include "beamtrack/rng.hpp"
#include "beamtrack/simulator.hpp"
#include "beamtrack/sounder.hpp"

namespace {

using namespace beamtrack;

void BM_MlSearchCs(benchmark::State& state) {
  ArrayConfig cfg;
  Rng rng(7);
  const Sounder sounder = cs_sounder(cfg, kCsMeasurements, rng);
  ChannelState truth;
  truth.paths.push_back(PathState{{1.0, 0.0}, deg2rad(12.0), deg2rad(15.0)});
  const arma::cx_mat H = channel_matrix(truth, cfg);
  const arma::cx_vec y = measure(H, sounder, 1.0, rng);
  const std::vector<double> grid_bs = codebook(cfg.q_bs);
  const std::vector<double> grid_ms = codebook(cfg.q_ms);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ml_angle_search(y, sounder, grid_bs, grid_ms, cfg));
  }
}
BENCHMARK(BM_MlSearchCs)->Unit(benchmark::kMillisecond);

void BM_MlSearchPcs(benchmark::State& state) {
  ArrayConfig cfg;
  Rng rng(7);
  const arma::cx_mat base_f = random_qpsk_sounder(cfg.n_bs, kPcsSequenceCount, rng);
  const arma::cx_mat base_w = random_qpsk_sounder(cfg.n_ms, kPcsSequenceCount, rng);
  const Sounder sounder =
      pcs_sounder(TrackerSide{deg2rad(12.0), 1}, TrackerSide{deg2rad(15.0), 1},
                  cfg, base_f, base_w);
  ChannelState truth;
  truth.paths.push_back(PathState{{1.0, 0.0}, deg2rad(12.3), deg2rad(15.3)});
  const arma::cx_mat H = channel_matrix(truth, cfg);
  const arma::cx_vec y = measure(H, sounder, 1.0, rng);
  const std::vector<double> grid_bs = codebook(cfg.q_bs);
  const std::vector<double> grid_ms = codebook(cfg.q_ms);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ml_angle_search(y, sounder, grid_bs, grid_ms, cfg));
  }
}
BENCHMARK(BM_MlSearchPcs)->Unit(benchmark::kMillisecond);

void BM_PcsSounderBuild(benchmark::State& state) {
  ArrayConfig cfg;
  Rng rng(7);
  const arma::cx_mat base_f = random_qpsk_sounder(cfg.n_bs, kPcsSequenceCount, rng);
  const arma::cx_mat base_w = random_qpsk_sounder(cfg.n_ms, kPcsSequenceCount, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pcs_sounder(TrackerSide{deg2rad(12.0), 1},
                                         TrackerSide{deg2rad(15.0), -1}, cfg,
                                         base_f, base_w));
  }
}
BENCHMARK(BM_PcsSounderBuild)->Unit(benchmark::kMicrosecond);

void BM_RunFramePcs(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.mc_runs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_frame(cfg, Algorithm::kPcs, 0.0, 0));
  }
}
BENCHMARK(BM_RunFramePcs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
