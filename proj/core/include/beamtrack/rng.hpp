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

#ifndef BEAMTRACK_RNG_HPP
#define BEAMTRACK_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace beamtrack {

// Self-contained generator (xoshiro256++ seeded through splitmix64).
// The standard <random> engines are deterministic too, but the library
// distributions are implementation-defined; simulation results have to be
// bit-reproducible, so uniform/gaussian draws are spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& s : state_) {
      x += 0x9E3779B97F4A7C15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      s = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller (cosine branch; no cached spare, so the
  // draw count per call is fixed).
  double gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * kPi * u2);
  }

  // Circularly-symmetric complex gaussian CN(0, variance): real and
  // imaginary parts each N(0, variance/2).
  std::complex<double> complex_gaussian(double variance) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-variance * std::log(1.0 - u1));
    return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;

  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::uint64_t state_[4];
};

// Named sub-streams of one experiment seed. Keeping sounder construction,
// measurement noise, mobility, and path-gain phases on separate streams lets
// algorithm comparisons share trajectories.
enum class RngStream : std::uint64_t {
  kSounder = 1,
  kNoise = 2,
  kMobility = 3,
  kGainPhase = 4,
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stable derivation of a per-(run, stream) seed from the experiment seed.
// Monte Carlo results therefore depend only on (seed, run_index), never on
// scheduling or worker count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t run_index,
                                 RngStream stream) {
  std::uint64_t h = detail::mix64(seed);
  h = detail::mix64(h ^ detail::mix64(run_index));
  h = detail::mix64(h ^ (static_cast<std::uint64_t>(stream) * 0xD6E8FEB86659FD93ULL));
  return h;
}

}  // namespace beamtrack

#endif  // BEAMTRACK_RNG_HPP
