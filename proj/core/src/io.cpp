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

#include "beamtrack/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace beamtrack {

std::string format_number(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0.0 ? "inf" : "-inf";
  }
  if (value == 0.0) {
    return "0";
  }
  // Normalized scientific form gives the 6 significant digits and the
  // decimal exponent; the plain string is rebuilt from those.
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.5e", value);
  const std::string sci = buf;
  const bool negative = sci[0] == '-';
  std::size_t pos = negative ? 1 : 0;

  std::string digits;
  digits.push_back(sci[pos]);
  pos += 2;  // skip the decimal point
  while (pos < sci.size() && std::isdigit(static_cast<unsigned char>(sci[pos]))) {
    digits.push_back(sci[pos]);
    ++pos;
  }
  const int exponent = std::atoi(sci.c_str() + pos + 1);
  while (digits.size() > 1 && digits.back() == '0') {
    digits.pop_back();
  }

  std::string out = negative ? "-" : "";
  const int ndigits = static_cast<int>(digits.size());
  if (exponent >= ndigits - 1) {
    out += digits;
    out.append(static_cast<std::size_t>(exponent - (ndigits - 1)), '0');
  } else if (exponent >= 0) {
    out += digits.substr(0, static_cast<std::size_t>(exponent + 1));
    out += '.';
    out += digits.substr(static_cast<std::size_t>(exponent + 1));
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out += digits;
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("failed to open " + path.string() + " for writing");
  }
  out << body;
  out.flush();
  if (!out) {
    throw std::runtime_error("failed to write " + path.string());
  }
}

}  // namespace

void emit_results(const MetricsTable& table, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("failed to create directory " + dir.string() +
                             ": " + ec.message());
  }

  std::ostringstream metrics;
  metrics << "algorithm,schedule,snr_db,rmse_aod_deg,rmse_aoa_deg,mean_se,"
             "overhead\n";
  for (const MetricsRow& row : table.rows) {
    metrics << algorithm_name(row.algorithm) << ','
            << schedule_name(row.schedule) << ',' << format_number(row.snr_db)
            << ',' << format_number(row.rmse_aod_deg) << ','
            << format_number(row.rmse_aoa_deg) << ','
            << format_number(row.mean_se) << ',' << format_number(row.overhead)
            << '\n';
  }
  write_file(dir / kMetricsFileName, metrics.str());

  // Series SNR: 0 dB when present (the operating point of the per-slot
  // comparison), otherwise the first level that appears.
  bool have_ref = false;
  double ref_snr = 0.0;
  for (const MetricsRow& row : table.rows) {
    if (row.snr_db == 0.0) {
      have_ref = true;
      ref_snr = 0.0;
      break;
    }
    if (!have_ref) {
      have_ref = true;
      ref_snr = row.snr_db;
    }
  }

  std::ostringstream series;
  series << "slot,algorithm,mean_se\n";
  for (const MetricsRow& row : table.rows) {
    if (!have_ref || row.snr_db != ref_snr) {
      continue;
    }
    const std::string name = algorithm_name(row.algorithm);
    for (std::size_t k = 0; k < row.se_time_series.size(); ++k) {
      series << (k + 1) << ',' << name << ','
             << format_number(row.se_time_series[k]) << '\n';
    }
  }
  write_file(dir / kTimeSeriesFileName, series.str());
}

}  // namespace beamtrack
