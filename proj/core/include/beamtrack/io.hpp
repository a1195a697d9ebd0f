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

#pragma once

#include <string>

#include "beamtrack/simulator.hpp"

namespace beamtrack {

inline constexpr const char* kMetricsFileName = "metrics.csv";
inline constexpr const char* kTimeSeriesFileName = "se_timeseries.csv";

// Plain decimal with 6 significant digits, no exponent notation, trailing
// zeros stripped. Locale-independent, so emitted files are byte-stable.
std::string format_number(double value);

// Writes metrics.csv and se_timeseries.csv under out_dir (created if
// missing). The time series has no SNR column; when the table covers several
// SNR levels the series is taken at 0 dB if present, otherwise at the first
// level in table order. Throws std::runtime_error naming the path on I/O
// failure.
void emit_results(const MetricsTable& table, const std::string& out_dir);

}  // namespace beamtrack
