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

#include "beamtrack/estimator.hpp"

#include <cmath>
#include <complex>

namespace beamtrack {

arma::cx_vec z_vector(double aod_rad, double aoa_rad, const Sounder& sounder,
                      const ArrayConfig& cfg) {
  validate(cfg);
  if (sounder.precoders.n_rows != static_cast<arma::uword>(cfg.n_bs) ||
      sounder.combiners.n_rows != static_cast<arma::uword>(cfg.n_ms)) {
    throw std::invalid_argument("z_vector: sounder/array dimension mismatch");
  }
  const arma::cx_vec a_bs = steering_vector(aod_rad, cfg.n_bs);
  const arma::cx_vec a_ms = steering_vector(aoa_rad, cfg.n_ms);
  const double scale =
      std::sqrt(static_cast<double>(cfg.n_bs) * static_cast<double>(cfg.n_ms));
  arma::cx_vec z(sounder.precoders.n_cols);
  for (arma::uword k = 0; k < z.n_elem; ++k) {
    z(k) = scale * arma::cdot(sounder.combiners.col(k), a_ms) *
           arma::cdot(a_bs, sounder.precoders.col(k));
  }
  return z;
}

std::complex<double> ls_gain(const arma::cx_vec& y, const arma::cx_vec& z) {
  if (y.n_elem != z.n_elem) {
    throw std::invalid_argument("ls_gain: dimension mismatch");
  }
  const double zz = std::real(arma::cdot(z, z));
  if (zz <= 0.0) {
    throw std::invalid_argument("ls_gain: z must be nonzero");
  }
  return arma::cdot(z, y) / zz;
}

Estimate ml_angle_search(const arma::cx_vec& y, const Sounder& sounder,
                         const std::vector<double>& grid_bs,
                         const std::vector<double>& grid_ms,
                         const ArrayConfig& cfg) {
  validate(cfg);
  if (grid_bs.empty() || grid_ms.empty()) {
    throw std::invalid_argument("ml_angle_search: empty search grid");
  }
  const int m = sounder.measurement_count();
  if (y.n_elem != static_cast<arma::uword>(m)) {
    throw std::invalid_argument("ml_angle_search: measurement count mismatch");
  }
  const std::size_t qb = grid_bs.size();
  const std::size_t qm = grid_ms.size();

  // Factorized responses: the hypothesis response separates into a
  // BS-side factor a_bs(theta)^H f_k and an MS-side factor w_k^H a_ms(phi),
  // so the q_bs*q_ms*m search needs only (q_bs + q_ms)*m inner products up
  // front. The common sqrt(n_bs*n_ms) scale cancels inside the objective.
  std::vector<std::complex<double>> bs_resp(qb * static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < qb; ++i) {
    const arma::cx_vec a = steering_vector(grid_bs[i], cfg.n_bs);
    for (int k = 0; k < m; ++k) {
      bs_resp[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(k)] =
          arma::cdot(a, sounder.precoders.col(static_cast<arma::uword>(k)));
    }
  }
  // Per MS hypothesis, fold the measurement in: cy = conj(ms_resp) .* y and
  // bb = |ms_resp|^2, laid out contiguously per hypothesis.
  std::vector<std::complex<double>> cy(qm * static_cast<std::size_t>(m));
  std::vector<double> bb(qm * static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < qm; ++j) {
    const arma::cx_vec a = steering_vector(grid_ms[j], cfg.n_ms);
    for (int k = 0; k < m; ++k) {
      const std::complex<double> w =
          arma::cdot(sounder.combiners.col(static_cast<arma::uword>(k)), a);
      const std::size_t idx =
          j * static_cast<std::size_t>(m) + static_cast<std::size_t>(k);
      cy[idx] = std::conj(w) * y(static_cast<arma::uword>(k));
      bb[idx] = std::norm(w);
    }
  }

  double best_obj = -1.0;
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  double max_energy = 0.0;
  std::vector<double> aa(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < qb; ++i) {
    const std::complex<double>* arow = &bs_resp[i * static_cast<std::size_t>(m)];
    for (int k = 0; k < m; ++k) {
      aa[static_cast<std::size_t>(k)] = std::norm(arow[k]);
    }
    for (std::size_t j = 0; j < qm; ++j) {
      const std::complex<double>* cyj = &cy[j * static_cast<std::size_t>(m)];
      const double* bbj = &bb[j * static_cast<std::size_t>(m)];
      double num_re = 0.0;
      double num_im = 0.0;
      double den = 0.0;
      for (int k = 0; k < m; ++k) {
        const double ar = arow[k].real();
        const double ai = arow[k].imag();
        const double cr = cyj[k].real();
        const double ci = cyj[k].imag();
        num_re += ar * cr + ai * ci;  // conj(a) * cy, real part
        num_im += ar * ci - ai * cr;  // conj(a) * cy, imag part
        den += aa[static_cast<std::size_t>(k)] * bbj[k];
      }
      if (den > max_energy) {
        max_energy = den;
      }
      if (den <= 0.0) {
        continue;
      }
      const double obj = (num_re * num_re + num_im * num_im) / den;
      if (obj > best_obj) {
        best_obj = obj;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (max_energy <= 0.0) {
    throw DegenerateResponseError(
        "ml_angle_search: all candidate responses are zero");
  }

  Estimate est;
  est.aod_index = static_cast<int>(best_i);
  est.aoa_index = static_cast<int>(best_j);
  est.aod_rad = grid_bs[best_i];
  est.aoa_rad = grid_ms[best_j];
  est.metric = best_obj < 0.0 ? 0.0 : best_obj;
  const arma::cx_vec z = z_vector(est.aod_rad, est.aoa_rad, sounder, cfg);
  const double zz = std::real(arma::cdot(z, z));
  est.gain = zz > 0.0 ? arma::cdot(z, y) / zz : std::complex<double>(0.0, 0.0);
  return est;
}

Estimate beamsweep_decision(const arma::cx_vec& y,
                            const std::vector<double>& dirs_bs,
                            const std::vector<double>& dirs_ms,
                            const ArrayConfig& cfg) {
  validate(cfg);
  if (dirs_bs.empty() || dirs_ms.empty()) {
    throw std::invalid_argument("beamsweep_decision: empty direction lists");
  }
  if (y.n_elem != dirs_bs.size() * dirs_ms.size()) {
    throw std::invalid_argument(
        "beamsweep_decision: measurement/direction count mismatch");
  }
  arma::uword best_k = 0;
  double best_mag = -1.0;
  for (arma::uword k = 0; k < y.n_elem; ++k) {
    const double mag = std::abs(y(k));
    if (mag > best_mag) {
      best_mag = mag;
      best_k = k;
    }
  }
  const std::size_t i = best_k / dirs_ms.size();
  const std::size_t j = best_k % dirs_ms.size();
  Estimate est;
  est.aod_index = static_cast<int>(i);
  est.aoa_index = static_cast<int>(j);
  est.aod_rad = dirs_bs[i];
  est.aoa_rad = dirs_ms[j];
  est.metric = best_mag;
  est.gain = y(best_k) / std::sqrt(static_cast<double>(cfg.n_bs) *
                                   static_cast<double>(cfg.n_ms));
  return est;
}

}  // namespace beamtrack
