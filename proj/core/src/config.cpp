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

#include "beamtrack/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace beamtrack {

namespace {

std::string trim(const std::string& s) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) {
    ++lo;
  }
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) {
    --hi;
  }
  return s.substr(lo, hi - lo);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    parts.push_back(trim(item));
  }
  return parts;
}

double to_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad number for " + what + ": '" + s + "'");
  }
  if (used != s.size()) {
    throw std::runtime_error("config: bad number for " + what + ": '" + s + "'");
  }
  return v;
}

long long to_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer for " + what + ": '" + s + "'");
  }
  if (used != s.size()) {
    throw std::runtime_error("config: bad integer for " + what + ": '" + s + "'");
  }
  return v;
}

std::vector<DriftSegment> parse_segments(const std::string& value) {
  std::vector<DriftSegment> segments;
  for (const std::string& part : split(value, ';')) {
    if (part.empty()) {
      continue;
    }
    const std::vector<std::string> fields = split(part, ':');
    if (fields.size() != 3) {
      throw std::runtime_error(
          "config: drift_aoa_segments entries must be begin:end:drift, got '" +
          part + "'");
    }
    DriftSegment seg;
    seg.begin_slot = static_cast<int>(to_int(fields[0], "segment begin"));
    seg.end_slot = fields[1] == "inf"
                       ? std::numeric_limits<int>::max()
                       : static_cast<int>(to_int(fields[1], "segment end"));
    seg.drift_deg_per_frame = to_double(fields[2], "segment drift");
    if (seg.end_slot <= seg.begin_slot) {
      throw std::runtime_error("config: segment end must exceed begin in '" +
                               part + "'");
    }
    segments.push_back(seg);
  }
  if (segments.empty()) {
    throw std::runtime_error("config: drift_aoa_segments must not be empty");
  }
  return segments;
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "cs") {
    return Algorithm::kCs;
  }
  if (name == "pcs") {
    return Algorithm::kPcs;
  }
  if (name == "beamsweep") {
    return Algorithm::kBeamSweep;
  }
  throw std::runtime_error("config: unknown algorithm '" + name + "'");
}

std::vector<Algorithm> parse_algorithm_list(const std::string& names) {
  const std::string trimmed = trim(names);
  if (trimmed == "all") {
    return {Algorithm::kCs, Algorithm::kPcs, Algorithm::kBeamSweep};
  }
  std::vector<Algorithm> algorithms;
  for (const std::string& part : split(trimmed, ',')) {
    if (!part.empty()) {
      algorithms.push_back(parse_algorithm(part));
    }
  }
  if (algorithms.empty()) {
    throw std::runtime_error("config: algorithm list is empty");
  }
  return algorithms;
}

Schedule parse_schedule(const std::string& name) {
  if (name == "aperiodic") {
    return Schedule::kAperiodic;
  }
  if (name == "periodic") {
    return Schedule::kPeriodic;
  }
  throw std::runtime_error("config: unknown schedule '" + name + "'");
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> values;
  for (const std::string& part : split(csv, ',')) {
    if (!part.empty()) {
      values.push_back(to_double(part, "list entry"));
    }
  }
  return values;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> values;
  for (const std::string& part : split(csv, ',')) {
    if (!part.empty()) {
      values.push_back(static_cast<int>(to_int(part, "list entry")));
    }
  }
  return values;
}

ExperimentConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string body = trim(line);
    if (body.empty()) {
      continue;
    }
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               " is not key = value");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               " has empty key or value");
    }
    kv[key] = value;
  }

  ExperimentConfig cfg;
  // Mobility kind first so later drift keys can override the preset,
  // independent of key order in the file.
  if (auto it = kv.find("mobility"); it != kv.end()) {
    if (it->second == "model1") {
      cfg.mobility = MobilityModel::model1();
    } else if (it->second == "model2") {
      cfg.mobility = MobilityModel::model2();
    } else if (it->second == "static") {
      cfg.mobility = MobilityModel::static_channel();
    } else {
      throw std::runtime_error("config: unknown mobility '" + it->second + "'");
    }
    kv.erase(it);
  }

  for (const auto& [key, value] : kv) {
    if (key == "n_bs") {
      cfg.array.n_bs = static_cast<int>(to_int(value, key));
    } else if (key == "n_ms") {
      cfg.array.n_ms = static_cast<int>(to_int(value, key));
    } else if (key == "q_bs") {
      cfg.array.q_bs = static_cast<int>(to_int(value, key));
    } else if (key == "q_ms") {
      cfg.array.q_ms = static_cast<int>(to_int(value, key));
    } else if (key == "algorithm") {
      cfg.algorithms = parse_algorithm_list(value);
    } else if (key == "schedule") {
      cfg.schedule = parse_schedule(value);
    } else if (key == "o_max") {
      cfg.max_overhead = to_double(value, key);
    } else if (key == "snr_db") {
      cfg.snr_db = parse_double_list(value);
    } else if (key == "mc_runs") {
      cfg.mc_runs = static_cast<int>(to_int(value, key));
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_int(value, key));
    } else if (key == "frame_len") {
      cfg.frame_len = static_cast<int>(to_int(value, key));
      cfg.mobility.frame_len = cfg.frame_len;
    } else if (key == "t1") {
      cfg.first_period = static_cast<int>(to_int(value, key));
    } else if (key == "gamma_max_deg") {
      cfg.gamma_max_deg = to_double(value, key);
    } else if (key == "init_aod_deg") {
      cfg.initial_aod_deg = to_double(value, key);
    } else if (key == "init_aoa_deg") {
      cfg.initial_aoa_deg = to_double(value, key);
    } else if (key == "initial_direction_sign") {
      cfg.initial_direction_sign = static_cast<int>(to_int(value, key));
    } else if (key == "drift_aod_deg") {
      cfg.mobility.aod_drift_deg = to_double(value, key);
    } else if (key == "drift_aoa_deg") {
      cfg.mobility.aoa_drift = {
          DriftSegment{1, std::numeric_limits<int>::max(), to_double(value, key)}};
    } else if (key == "drift_aoa_segments") {
      cfg.mobility.aoa_drift = parse_segments(value);
    } else if (key == "noise_var_deg2") {
      cfg.mobility.noise_var_deg2 = to_double(value, key);
    } else if (key == "tracking_periods") {
      cfg.tracking_periods = parse_int_list(value);
    } else {
      throw std::runtime_error("config: unknown key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace beamtrack
