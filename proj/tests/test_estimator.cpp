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
#include <complex>
#include <vector>

#include "beamtrack/estimator.hpp"

using namespace beamtrack;

namespace {

arma::cx_vec random_measurement(int m, Rng& rng) {
  arma::cx_vec y(static_cast<arma::uword>(m));
  for (arma::uword k = 0; k < y.n_elem; ++k) {
    y(k) = rng.complex_gaussian(1.0);
  }
  return y;
}

// Exhaustive reference search, one z_vector per grid cell, strict-greater
// update so the lowest lexicographic (i, j) wins ties.
Estimate brute_force_search(const arma::cx_vec& y, const Sounder& sounder,
                            const std::vector<double>& grid_bs,
                            const std::vector<double>& grid_ms,
                            const ArrayConfig& cfg) {
  Estimate best;
  double best_obj = -1.0;
  for (std::size_t i = 0; i < grid_bs.size(); ++i) {
    for (std::size_t j = 0; j < grid_ms.size(); ++j) {
      const arma::cx_vec z = z_vector(grid_bs[i], grid_ms[j], sounder, cfg);
      const double zz = std::real(arma::cdot(z, z));
      if (zz <= 0.0) {
        continue;
      }
      const double obj = std::norm(arma::cdot(z, y)) / zz;
      if (obj > best_obj) {
        best_obj = obj;
        best.aod_index = static_cast<int>(i);
        best.aoa_index = static_cast<int>(j);
        best.aod_rad = grid_bs[i];
        best.aoa_rad = grid_ms[j];
        best.metric = obj;
        best.gain = arma::cdot(z, y) / zz;
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("z vector matches the explicit factored response") {
  ArrayConfig cfg;
  Rng rng(21);
  const Sounder s = cs_sounder(cfg, 7, rng);
  const double aod = deg2rad(23.0);
  const double aoa = deg2rad(-41.0);
  const arma::cx_vec z = z_vector(aod, aoa, s, cfg);
  const arma::cx_vec a_bs = steering_vector(aod, cfg.n_bs);
  const arma::cx_vec a_ms = steering_vector(aoa, cfg.n_ms);
  REQUIRE(z.n_elem == 7);
  for (arma::uword k = 0; k < z.n_elem; ++k) {
    const std::complex<double> expected =
        32.0 * arma::cdot(s.combiners.col(k), a_ms) *
        arma::cdot(a_bs, s.precoders.col(k));
    CHECK(std::abs(z(k) - expected) < 1e-12);
  }
}

TEST_CASE("z vector equals the noiseless measurement of a unit-gain channel") {
  ArrayConfig cfg;
  Rng rng(22);
  const Sounder s = cs_sounder(cfg, 9, rng);
  ChannelState state;
  state.paths.push_back(PathState{{1.0, 0.0}, deg2rad(12.0), deg2rad(15.0)});
  const arma::cx_mat H = channel_matrix(state, cfg);
  Rng noise(1);
  const arma::cx_vec y = measure(H, s, 0.0, noise);
  const arma::cx_vec z = z_vector(deg2rad(12.0), deg2rad(15.0), s, cfg);
  CHECK(arma::norm(y - z) < 1e-10);
}

TEST_CASE("ls gain recovers an exact-fit gain") {
  Rng rng(23);
  const arma::cx_vec z = random_measurement(12, rng);
  const std::complex<double> g{0.3, -1.7};
  CHECK(std::abs(ls_gain(g * z, z) - g) < 1e-13);
}

TEST_CASE("ls gain leaves an orthogonal residual and minimizes the misfit") {
  Rng rng(24);
  const arma::cx_vec z = random_measurement(10, rng);
  const arma::cx_vec y = random_measurement(10, rng);
  const std::complex<double> g = ls_gain(y, z);
  const arma::cx_vec r = y - g * z;
  CHECK(std::abs(arma::cdot(z, r)) < 1e-12);
  const double base = arma::norm(r);
  for (const std::complex<double> d :
       {std::complex<double>{0.01, 0.0}, {0.0, 0.01}, {-0.02, 0.03}}) {
    CHECK(arma::norm(y - (g + d) * z) > base);
  }
}

TEST_CASE("ls gain validates its inputs") {
  arma::cx_vec y(4, arma::fill::ones);
  arma::cx_vec z3(3, arma::fill::ones);
  arma::cx_vec z0(4, arma::fill::zeros);
  CHECK_THROWS_AS(ls_gain(y, z3), std::invalid_argument);
  CHECK_THROWS_AS(ls_gain(y, z0), std::invalid_argument);
}

TEST_CASE("grid search agrees with a brute-force reference") {
  ArrayConfig cfg;
  cfg.n_bs = 8;
  cfg.n_ms = 8;
  cfg.q_bs = 8;
  cfg.q_ms = 8;
  const std::vector<double> grid_bs = codebook(8);
  const std::vector<double> grid_ms = codebook(8);
  Rng rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const Sounder s = cs_sounder(cfg, 10, rng);
    const arma::cx_vec y = random_measurement(10, rng);
    const Estimate got = ml_angle_search(y, s, grid_bs, grid_ms, cfg);
    const Estimate ref = brute_force_search(y, s, grid_bs, grid_ms, cfg);
    CHECK(got.aod_index == ref.aod_index);
    CHECK(got.aoa_index == ref.aoa_index);
    CHECK(got.aod_rad == ref.aod_rad);
    CHECK(got.aoa_rad == ref.aoa_rad);
    CHECK(got.metric == doctest::Approx(ref.metric).epsilon(1e-10));
    CHECK(std::abs(got.gain - ref.gain) < 1e-10);
  }
}

TEST_CASE("grid search recovers an on-grid channel exactly without noise") {
  ArrayConfig cfg;
  const std::vector<double> grid_bs = codebook(cfg.q_bs);
  const std::vector<double> grid_ms = codebook(cfg.q_ms);
  Rng rng(26);
  const Sounder s = cs_sounder(cfg, 45, rng);
  const int i_true = 170;  // arbitrary grid cells
  const int j_true = 97;
  ChannelState state;
  const std::complex<double> g = std::polar(1.0, 2.2);
  state.paths.push_back(PathState{g, grid_bs[static_cast<std::size_t>(i_true)],
                                  grid_ms[static_cast<std::size_t>(j_true)]});
  const arma::cx_mat H = channel_matrix(state, cfg);
  Rng noise(2);
  const arma::cx_vec y = measure(H, s, 0.0, noise);
  const Estimate est = ml_angle_search(y, s, grid_bs, grid_ms, cfg);
  CHECK(est.aod_index == i_true);
  CHECK(est.aoa_index == j_true);
  CHECK(std::abs(est.gain - g) < 1e-9);
}

TEST_CASE("grid search is scale covariant") {
  ArrayConfig cfg;
  cfg.n_bs = 8;
  cfg.n_ms = 8;
  const std::vector<double> grid = codebook(8);
  Rng rng(27);
  const Sounder s = cs_sounder(cfg, 10, rng);
  const arma::cx_vec y = random_measurement(10, rng);
  const Estimate e1 = ml_angle_search(y, s, grid, grid, cfg);
  const Estimate e2 = ml_angle_search(3.0 * y, s, grid, grid, cfg);
  CHECK(e1.aod_index == e2.aod_index);
  CHECK(e1.aoa_index == e2.aoa_index);
  CHECK(e2.metric == doctest::Approx(9.0 * e1.metric).epsilon(1e-10));
  CHECK(std::abs(e2.gain - 3.0 * e1.gain) < 1e-10);
}

TEST_CASE("grid search breaks ties toward the lowest index pair") {
  // A zero measurement makes every objective zero; the strict-greater scan
  // must then keep the first populated cell.
  ArrayConfig cfg;
  cfg.n_bs = 8;
  cfg.n_ms = 8;
  const std::vector<double> grid = codebook(8);
  Rng rng(28);
  const Sounder s = cs_sounder(cfg, 6, rng);
  const arma::cx_vec y(6, arma::fill::zeros);
  const Estimate est = ml_angle_search(y, s, grid, grid, cfg);
  CHECK(est.aod_index == 0);
  CHECK(est.aoa_index == 0);
  CHECK(est.metric == 0.0);
}

TEST_CASE("grid search reports a degenerate all-zero response") {
  ArrayConfig cfg;
  Sounder s;
  s.precoders = arma::cx_mat(32, 4, arma::fill::zeros);
  s.combiners = arma::cx_mat(32, 4, arma::fill::zeros);
  const arma::cx_vec y(4, arma::fill::ones);
  CHECK_THROWS_AS(
      ml_angle_search(y, s, codebook(8), codebook(8), cfg),
      DegenerateResponseError);
}

TEST_CASE("grid search validates grids and measurement size") {
  ArrayConfig cfg;
  Rng rng(29);
  const Sounder s = cs_sounder(cfg, 4, rng);
  const arma::cx_vec y(4, arma::fill::ones);
  CHECK_THROWS_AS(ml_angle_search(y, s, {}, codebook(8), cfg),
                  std::invalid_argument);
  const arma::cx_vec bad(5, arma::fill::ones);
  CHECK_THROWS_AS(ml_angle_search(bad, s, codebook(8), codebook(8), cfg),
                  std::invalid_argument);
}

TEST_CASE("beam sweep decision picks the strongest pair in bs-major order") {
  ArrayConfig cfg;
  const std::vector<double> dirs_bs = {0.1, 0.2, 0.3, 0.4, 0.5};
  const std::vector<double> dirs_ms = {-0.5, -0.4, -0.3, -0.2, -0.1};
  arma::cx_vec y(25, arma::fill::zeros);
  y(13) = {0.0, 4.0};  // pair (i=2, j=3)
  const Estimate est = beamsweep_decision(y, dirs_bs, dirs_ms, cfg);
  CHECK(est.aod_index == 2);
  CHECK(est.aoa_index == 3);
  CHECK(est.aod_rad == 0.3);
  CHECK(est.aoa_rad == -0.2);
  CHECK(est.metric == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(std::abs(est.gain - std::complex<double>(0.0, 4.0 / 32.0)) < 1e-15);
}

TEST_CASE("beam sweep decision keeps the first of equal magnitudes") {
  ArrayConfig cfg;
  const std::vector<double> dirs = {0.1, 0.2, 0.3, 0.4, 0.5};
  arma::cx_vec y(25, arma::fill::zeros);
  y(3) = {3.0, 0.0};
  y(7) = {0.0, -3.0};
  const Estimate est = beamsweep_decision(y, dirs, dirs, cfg);
  CHECK(est.aod_index == 0);
  CHECK(est.aoa_index == 3);
}

TEST_CASE("beam sweep decision recovers an in-window channel exactly") {
  ArrayConfig cfg;
  const auto grid = codebook(kBeamSweepGridSize);
  const double aod = grid[11];
  const double aoa = grid[19];
  const Sounder s = beamsweep_sounder(aod, aoa, cfg);
  ChannelState state;
  const std::complex<double> g = std::polar(1.0, -0.4);
  state.paths.push_back(PathState{g, aod, aoa});
  const arma::cx_mat H = channel_matrix(state, cfg);
  Rng noise(3);
  const arma::cx_vec y = measure(H, s, 0.0, noise);
  const Estimate est = beamsweep_decision(y, s.sweep_aod, s.sweep_aoa, cfg);
  CHECK(est.aod_rad == doctest::Approx(aod).epsilon(1e-14));
  CHECK(est.aoa_rad == doctest::Approx(aoa).epsilon(1e-14));
  CHECK(std::abs(est.gain - g) < 1e-9);
}

TEST_CASE("beam sweep decision validates its inputs") {
  ArrayConfig cfg;
  const std::vector<double> dirs = {0.1, 0.2};
  arma::cx_vec y(3, arma::fill::ones);
  CHECK_THROWS_AS(beamsweep_decision(y, dirs, dirs, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(beamsweep_decision(y, {}, dirs, cfg), std::invalid_argument);
}
