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

#include "beamtrack/array.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamtrack {

void validate(const ArrayConfig& cfg) {
  if (cfg.n_bs < 1 || cfg.n_ms < 1) {
    throw std::invalid_argument("array config: antenna counts must be >= 1");
  }
  if (cfg.q_bs < 2 || cfg.q_ms < 2) {
    throw std::invalid_argument("array config: grid sizes must be >= 2");
  }
}

arma::cx_vec steering_vector(double angle_rad, int n) {
  if (n < 1) {
    throw std::invalid_argument("steering_vector: n must be >= 1");
  }
  arma::cx_vec a(static_cast<arma::uword>(n));
  const double psi = kPi * std::sin(angle_rad);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    a(static_cast<arma::uword>(k)) = std::polar(amp, -psi * k);
  }
  return a;
}

double steering_correlation(double angle_a_rad, double angle_b_rad, int n) {
  if (n < 1) {
    throw std::invalid_argument("steering_correlation: n must be >= 1");
  }
  const double dsin = std::sin(angle_a_rad) - std::sin(angle_b_rad);
  const double x = 0.5 * kPi * dsin;
  const double den = n * std::abs(std::sin(x));
  if (den < 1e-12) {
    return 1.0;  // main lobe / grating lobe limit
  }
  return std::abs(std::sin(n * x)) / den;
}

arma::cx_mat channel_matrix(const ChannelState& state, const ArrayConfig& cfg) {
  validate(cfg);
  if (state.paths.empty()) {
    throw std::invalid_argument("channel_matrix: at least one path required");
  }
  const double scale =
      std::sqrt(static_cast<double>(cfg.n_bs) * static_cast<double>(cfg.n_ms) /
                static_cast<double>(state.paths.size()));
  arma::cx_mat H(static_cast<arma::uword>(cfg.n_ms),
                 static_cast<arma::uword>(cfg.n_bs), arma::fill::zeros);
  for (const auto& path : state.paths) {
    const arma::cx_vec a_ms = steering_vector(path.aoa_rad, cfg.n_ms);
    const arma::cx_vec a_bs = steering_vector(path.aod_rad, cfg.n_bs);
    H += (scale * path.gain) * (a_ms * a_bs.t());
  }
  return H;
}

std::vector<double> codebook(int q) {
  if (q < 2) {
    throw std::invalid_argument("codebook: q must be >= 2");
  }
  std::vector<double> angles(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    angles[static_cast<std::size_t>(k)] = -0.5 * kPi + kPi * k / q;
  }
  return angles;
}

int nearest_codebook_index(double angle_rad, int q) {
  if (q < 2) {
    throw std::invalid_argument("nearest_codebook_index: q must be >= 2");
  }
  const long idx = std::lround((angle_rad + 0.5 * kPi) * q / kPi);
  return static_cast<int>(std::clamp<long>(idx, 0, q - 1));
}

std::complex<double> beamform(const arma::cx_vec& w, const arma::cx_mat& H,
                              const arma::cx_vec& f) {
  if (w.n_elem != H.n_rows || f.n_elem != H.n_cols) {
    throw std::invalid_argument("beamform: dimension mismatch");
  }
  return arma::as_scalar(w.t() * H * f);
}

}  // namespace beamtrack
