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

#ifndef BEAMTRACK_ESTIMATOR_HPP
#define BEAMTRACK_ESTIMATOR_HPP

#include <stdexcept>
#include <vector>

#include "beamtrack/sounder.hpp"

namespace beamtrack {

// Every candidate response vector was identically zero, so the measurement
// carries no angle information at all.
struct DegenerateResponseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Angle-pair decision plus the least-squares path gain at that pair.
// Indices refer to the search grid handed to the estimator (the full
// codebooks for the grid search, the 5-angle window for beam sweeping).
struct Estimate {
  std::complex<double> gain{0.0, 0.0};
  double aod_rad = 0.0;
  double aoa_rad = 0.0;
  int aod_index = 0;
  int aoa_index = 0;
  double metric = 0.0;  // |z^H y|^2 / ||z||^2 at the decision
};

// Noiseless unit-gain response of the sounder to the hypothesis (aod, aoa):
//   z_k = sqrt(n_bs*n_ms) * (w_k^H a_ms(aoa)) * (a_bs(aod)^H f_k).
arma::cx_vec z_vector(double aod_rad, double aoa_rad, const Sounder& sounder,
                      const ArrayConfig& cfg);

// Least-squares gain fit: argmin_g ||y - g z||^2 = z^H y / ||z||^2.
std::complex<double> ls_gain(const arma::cx_vec& y, const arma::cx_vec& z);

// Exhaustive search of grid_bs x grid_ms maximizing |z^H y|^2 / ||z||^2.
// Deterministic tie break: lowest (aod_index, aoa_index) lexicographically.
Estimate ml_angle_search(const arma::cx_vec& y, const Sounder& sounder,
                         const std::vector<double>& grid_bs,
                         const std::vector<double>& grid_ms,
                         const ArrayConfig& cfg);

// Beam-sweep decision: pick the swept pair k maximizing |y_k| (BS-major
// column order, first maximum wins), report its angles and the gain
// y_k / sqrt(n_bs*n_ms).
Estimate beamsweep_decision(const arma::cx_vec& y,
                            const std::vector<double>& dirs_bs,
                            const std::vector<double>& dirs_ms,
                            const ArrayConfig& cfg);

}  // namespace beamtrack

#endif  // BEAMTRACK_ESTIMATOR_HPP
