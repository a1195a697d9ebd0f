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

#ifndef BEAMTRACK_ARRAY_HPP
#define BEAMTRACK_ARRAY_HPP

#include <armadillo>
#include <complex>
#include <vector>

namespace beamtrack {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// All angles inside the library are radians; degrees appear only at the
// configuration / CSV boundary.
constexpr double deg2rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / kPi); }

// Half-wavelength ULAs at both link ends plus the beamspace grid sizes used
// by the grid estimators.
struct ArrayConfig {
  int n_bs = 32;   // base station antennas
  int n_ms = 32;   // mobile station antennas
  int q_bs = 256;  // departure-angle grid size
  int q_ms = 256;  // arrival-angle grid size
};

void validate(const ArrayConfig& cfg);

// One propagation path: unit-magnitude complex gain plus the departure and
// arrival angles, both in [-pi/2, pi/2].
struct PathState {
  std::complex<double> gain{1.0, 0.0};
  double aod_rad = 0.0;
  double aoa_rad = 0.0;
};

struct ChannelState {
  std::vector<PathState> paths;
};

// Unit-norm ULA steering vector: entry k = exp(-j*k*pi*sin(angle)) / sqrt(n).
arma::cx_vec steering_vector(double angle_rad, int n);

// |a(angle_a)^H a(angle_b)| in closed form (Dirichlet kernel). Equals the
// explicit inner product of the two steering vectors; used on the per-slot
// data path where building vectors would be wasteful.
double steering_correlation(double angle_a_rad, double angle_b_rad, int n);

// Narrowband geometric channel:
//   H = sqrt(n_bs*n_ms/L) * sum_l g_l * a_ms(aoa_l) * a_bs(aod_l)^H.
arma::cx_mat channel_matrix(const ChannelState& state, const ArrayConfig& cfg);

// Uniform-angle codebook {-pi/2 + k*pi/q : k = 0..q-1}, ascending.
std::vector<double> codebook(int q);

// Index of the codebook(q) entry nearest to angle_rad (ties resolve upward).
int nearest_codebook_index(double angle_rad, int q);

// w^H H f.
std::complex<double> beamform(const arma::cx_vec& w, const arma::cx_mat& H,
                              const arma::cx_vec& f);

}  // namespace beamtrack

#endif  // BEAMTRACK_ARRAY_HPP
