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

#include "beamtrack/sounder.hpp"

#include <algorithm>
#include <cmath>

namespace beamtrack {

arma::cx_mat random_qpsk_sounder(int n, int m, Rng& rng) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("random_qpsk_sounder: n and m must be >= 1");
  }
  const double scale = 1.0 / std::sqrt(2.0 * n);
  arma::cx_mat out(static_cast<arma::uword>(n), static_cast<arma::uword>(m));
  for (arma::uword c = 0; c < out.n_cols; ++c) {
    for (arma::uword r = 0; r < out.n_rows; ++r) {
      const std::uint64_t bits = rng.next_u64();
      const double re = (bits & 1u) ? -scale : scale;
      const double im = (bits & 2u) ? -scale : scale;
      out(r, c) = {re, im};
    }
  }
  return out;
}

Sounder cs_sounder(const ArrayConfig& cfg, int m, Rng& rng) {
  validate(cfg);
  Sounder s;
  s.scheme = SounderScheme::kCs;
  s.precoders = random_qpsk_sounder(cfg.n_bs, m, rng);
  s.combiners = random_qpsk_sounder(cfg.n_ms, m, rng);
  return s;
}

TripletMatrix shifted_triplet(double center_rad, double extra_shift_rad, int n) {
  if (n < 1) {
    throw std::invalid_argument("shifted_triplet: n must be >= 1");
  }
  const double sep = 2.0 * kPi / n;
  TripletMatrix t;
  t.center_rad = center_rad;
  t.extra_shift_rad = extra_shift_rad;
  t.columns.set_size(static_cast<arma::uword>(n), 3);
  t.columns.col(0) = steering_vector(center_rad + extra_shift_rad, n);
  t.columns.col(1) = steering_vector(center_rad + sep + extra_shift_rad, n);
  t.columns.col(2) = steering_vector(center_rad - sep + extra_shift_rad, n);
  return t;
}

arma::cx_vec project_constant_modulus(const arma::cx_vec& f,
                                      const TripletMatrix& triplet) {
  const arma::cx_mat& T = triplet.columns;
  if (f.n_elem != T.n_rows) {
    throw std::invalid_argument("project_constant_modulus: dimension mismatch");
  }
  const arma::cx_mat gram = T.t() * T;
  const double kappa = arma::cond(gram);
  if (!std::isfinite(kappa) || kappa > 1e12) {
    throw DegenerateGeometryError(
        "project_constant_modulus: steering triplet is numerically rank "
        "deficient (condition > 1e12)");
  }
  const arma::cx_vec coeff = arma::solve(gram, T.t() * f);
  const arma::cx_vec p = T * coeff;
  const double amp = 1.0 / std::sqrt(static_cast<double>(T.n_rows));
  arma::cx_vec out(p.n_elem);
  for (arma::uword i = 0; i < p.n_elem; ++i) {
    const double mag = std::abs(p(i));
    out(i) = (mag == 0.0) ? std::complex<double>(amp, 0.0)
                          : std::polar(amp, std::arg(p(i)));
  }
  return out;
}

namespace {

void check_direction(int direction, const char* what) {
  if (direction != 1 && direction != -1) {
    throw std::invalid_argument(std::string(what) +
                                ": scan direction must be +1 or -1");
  }
}

}  // namespace

Sounder pcs_sounder(const TrackerSide& bs, const TrackerSide& ms,
                    const ArrayConfig& cfg, const arma::cx_mat& base_precoders,
                    const arma::cx_mat& base_combiners) {
  validate(cfg);
  check_direction(bs.direction, "pcs_sounder (bs)");
  check_direction(ms.direction, "pcs_sounder (ms)");
  if (base_precoders.n_cols != base_combiners.n_cols ||
      base_precoders.n_cols == 0) {
    throw std::invalid_argument(
        "pcs_sounder: base sequences must come in matching nonempty pairs");
  }
  if (base_precoders.n_rows != static_cast<arma::uword>(cfg.n_bs) ||
      base_combiners.n_rows != static_cast<arma::uword>(cfg.n_ms)) {
    throw std::invalid_argument("pcs_sounder: base sequence dimension mismatch");
  }

  constexpr double kShiftFractions[4] = {0.0, 0.25, 0.5, 0.75};
  TripletMatrix triplets_bs[4];
  TripletMatrix triplets_ms[4];
  for (int i = 0; i < 4; ++i) {
    triplets_bs[i] = shifted_triplet(
        bs.angle_rad, kShiftFractions[i] * bs.direction * 2.0 * kPi / cfg.n_bs,
        cfg.n_bs);
    triplets_ms[i] = shifted_triplet(
        ms.angle_rad, kShiftFractions[i] * ms.direction * 2.0 * kPi / cfg.n_ms,
        cfg.n_ms);
  }

  const arma::uword seqs = base_precoders.n_cols;
  Sounder s;
  s.scheme = SounderScheme::kPcs;
  s.precoders.set_size(static_cast<arma::uword>(cfg.n_bs), 4 * seqs);
  s.combiners.set_size(static_cast<arma::uword>(cfg.n_ms), 4 * seqs);
  for (arma::uword seq = 0; seq < seqs; ++seq) {
    for (arma::uword i = 0; i < 4; ++i) {
      const arma::uword col = 4 * seq + i;
      s.precoders.col(col) =
          project_constant_modulus(base_precoders.col(seq), triplets_bs[i]);
      s.combiners.col(col) =
          project_constant_modulus(base_combiners.col(seq), triplets_ms[i]);
    }
  }
  return s;
}

namespace {

// Five consecutive grid angles centered on the quantized estimate; the
// window shifts inward at the grid edges so all five stay distinct.
std::vector<double> sweep_window(double prev_rad) {
  const auto grid = codebook(kBeamSweepGridSize);
  const int center = nearest_codebook_index(prev_rad, kBeamSweepGridSize);
  const int half = kBeamSweepWindow / 2;
  const int lo = std::clamp(center - half, 0, kBeamSweepGridSize - kBeamSweepWindow);
  std::vector<double> window(kBeamSweepWindow);
  for (int i = 0; i < kBeamSweepWindow; ++i) {
    window[static_cast<std::size_t>(i)] = grid[static_cast<std::size_t>(lo + i)];
  }
  return window;
}

}  // namespace

Sounder beamsweep_sounder(double prev_aod_rad, double prev_aoa_rad,
                          const ArrayConfig& cfg) {
  validate(cfg);
  Sounder s;
  s.scheme = SounderScheme::kBeamSweep;
  s.sweep_aod = sweep_window(prev_aod_rad);
  s.sweep_aoa = sweep_window(prev_aoa_rad);

  const int m = kBeamSweepWindow * kBeamSweepWindow;
  s.precoders.set_size(static_cast<arma::uword>(cfg.n_bs),
                       static_cast<arma::uword>(m));
  s.combiners.set_size(static_cast<arma::uword>(cfg.n_ms),
                       static_cast<arma::uword>(m));
  arma::cx_mat beams_bs(static_cast<arma::uword>(cfg.n_bs), kBeamSweepWindow);
  arma::cx_mat beams_ms(static_cast<arma::uword>(cfg.n_ms), kBeamSweepWindow);
  for (int i = 0; i < kBeamSweepWindow; ++i) {
    beams_bs.col(static_cast<arma::uword>(i)) =
        steering_vector(s.sweep_aod[static_cast<std::size_t>(i)], cfg.n_bs);
    beams_ms.col(static_cast<arma::uword>(i)) =
        steering_vector(s.sweep_aoa[static_cast<std::size_t>(i)], cfg.n_ms);
  }
  for (int i = 0; i < kBeamSweepWindow; ++i) {
    for (int j = 0; j < kBeamSweepWindow; ++j) {
      const arma::uword col = static_cast<arma::uword>(i * kBeamSweepWindow + j);
      s.precoders.col(col) = beams_bs.col(static_cast<arma::uword>(i));
      s.combiners.col(col) = beams_ms.col(static_cast<arma::uword>(j));
    }
  }
  return s;
}

arma::cx_vec measure(const arma::cx_mat& H, const Sounder& sounder,
                     double noise_var, Rng& rng) {
  if (noise_var < 0.0) {
    throw std::invalid_argument("measure: noise_var must be >= 0");
  }
  if (sounder.precoders.n_rows != H.n_cols ||
      sounder.combiners.n_rows != H.n_rows ||
      sounder.precoders.n_cols != sounder.combiners.n_cols) {
    throw std::invalid_argument("measure: dimension mismatch");
  }
  const arma::cx_mat hf = H * sounder.precoders;
  const double sigma = std::sqrt(noise_var);
  arma::cx_vec y(sounder.precoders.n_cols);
  for (arma::uword k = 0; k < y.n_elem; ++k) {
    y(k) = arma::cdot(sounder.combiners.col(k), hf.col(k)) +
           sigma * rng.complex_gaussian(1.0);
  }
  return y;
}

}  // namespace beamtrack
