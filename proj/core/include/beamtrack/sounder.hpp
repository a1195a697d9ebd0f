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

#ifndef BEAMTRACK_SOUNDER_HPP
#define BEAMTRACK_SOUNDER_HPP

#include <stdexcept>
#include <vector>

#include "beamtrack/array.hpp"
#include "beamtrack/rng.hpp"

namespace beamtrack {

// Triplet geometry became (numerically) rank deficient, e.g. a steering
// triplet centered at +-pi/2 where two columns coincide.
struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SounderScheme { kCs, kPcs, kBeamSweep };

// One tracking event's worth of training beams. Column k of `precoders`
// pairs with column k of `combiners`: training slot k transmits with
// precoders.col(k) and receives with combiners.col(k).
struct Sounder {
  arma::cx_mat precoders;  // n_bs x m
  arma::cx_mat combiners;  // n_ms x m
  SounderScheme scheme = SounderScheme::kCs;
  // Beam-sweep only: the five scanned grid angles per side, ascending.
  std::vector<double> sweep_aod;
  std::vector<double> sweep_aoa;

  int measurement_count() const { return static_cast<int>(precoders.n_cols); }
};

// Previous estimate and scan direction (+1/-1) for one link end.
struct TrackerSide {
  double angle_rad = 0.0;
  int direction = +1;
};

// n x m matrix of i.i.d. QPSK entries {+-1 +-j} scaled by 1/sqrt(2n), so
// every entry has magnitude 1/sqrt(n) and every column unit norm.
// Entries are drawn column-major (two rng bits per entry).
arma::cx_mat random_qpsk_sounder(int n, int m, Rng& rng);

// Quasi-omnidirectional QPSK sounder for both ends (precoders first, then
// combiners, from the same stream).
Sounder cs_sounder(const ArrayConfig& cfg, int m, Rng& rng);

// Three steering vectors around `center`: columns at center + shift,
// center + 2*pi/n + shift, center - 2*pi/n + shift (in that order).
struct TripletMatrix {
  arma::cx_mat columns;  // n x 3
  double center_rad = 0.0;
  double extra_shift_rad = 0.0;
};

TripletMatrix shifted_triplet(double center_rad, double extra_shift_rad, int n);

// Orthogonal projection of f onto the triplet column space (normal
// equations) followed by per-entry constant-modulus scaling to magnitude
// 1/sqrt(n); zero entries get phase 0. Throws DegenerateGeometryError when
// the 3x3 Gram matrix condition number exceeds 1e12.
arma::cx_vec project_constant_modulus(const arma::cx_vec& f,
                                      const TripletMatrix& triplet);

// Projected sounder: each stored base sequence is projected onto four
// triplets whose extra shifts are {0, 1/4, 1/2, 3/4} * direction * 2*pi/n.
// Columns come out sequence-major: base sequence s occupies columns
// 4s..4s+3 (shift fractions 0, 1/4, 1/2, 3/4 in order). With 5 base
// sequences this yields m = 20 measurements.
Sounder pcs_sounder(const TrackerSide& bs, const TrackerSide& ms,
                    const ArrayConfig& cfg, const arma::cx_mat& base_precoders,
                    const arma::cx_mat& base_combiners);

// Exhaustive cross sweep of 5 beams per side around the previous estimates
// quantized to a 32-angle grid; 25 beam pairs in BS-major order.
Sounder beamsweep_sounder(double prev_aod_rad, double prev_aoa_rad,
                          const ArrayConfig& cfg);

inline constexpr int kBeamSweepGridSize = 32;
inline constexpr int kBeamSweepWindow = 5;  // grid steps {-2..+2}

// y_k = w_k^H H f_k + n_k with n_k ~ CN(0, noise_var). Noise draws are
// unit-variance and scaled by sqrt(noise_var), so the same noise stream
// produces the same noise shape at every SNR (and noise_var = 0 consumes
// the identical number of draws).
arma::cx_vec measure(const arma::cx_mat& H, const Sounder& sounder,
                     double noise_var, Rng& rng);

}  // namespace beamtrack

#endif  // BEAMTRACK_SOUNDER_HPP
