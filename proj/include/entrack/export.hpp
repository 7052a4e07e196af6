// Copyright 2026 The entrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entrack/boundaries.hpp"
#include "entrack/scenarios.hpp"

namespace entrack::io {

/// 17 significant digits; infinities as `inf` / `-inf`, NaN as `nan`.
std::string format_double(double v);
double parse_double(const std::string& s);

/// `scenario,label,sequence,alpha,beta,lambda0,entropy_vn,gap,renyi_2,renyi_3`
/// followed by one `renyi_<d>` column per extra degree.
std::string trajectory_csv_header(std::span<const double> renyi_degrees);

/// All trajectories must carry the same Renyi degrees.
void write_trajectory_csv(std::ostream& out, std::span<const Trajectory> trajectories);

struct CsvPoint {
  std::string scenario;
  std::string label;
  std::size_t sequence = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  double lambda0 = 0.0;
  double entropy = 0.0;
  double gap = 0.0;
  std::vector<std::pair<double, double>> renyi;
};

/// Parses a file written by write_trajectory_csv. Throws InvalidInput with the
/// offending line on schema errors.
std::vector<CsvPoint> read_trajectory_csv(std::istream& in);

/// Self-contained figure input: points, config echo, seeds and sampled curves.
std::string trajectory_json(std::span<const Trajectory> trajectories,
                            std::span<const boundaries::BoundaryCurve> curves);

/// `curve,alpha,beta,sigma,degree,x,y,extrapolated,page_endpoint`
void write_curve_csv(std::ostream& out, const boundaries::BoundaryCurve& curve);

/// Generic numeric table with a header row.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};
void write_table_csv(std::ostream& out, const Table& table);

std::string sha256_file(const std::filesystem::path& path);
/// UTC, ISO 8601 with seconds.
std::string utc_timestamp();

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::uint64_t> seeds;
  std::string version;
  std::string started;
  std::string finished;
  std::vector<std::filesystem::path> outputs;  ///< digested when written
  std::vector<std::pair<std::string, std::string>> results;
};

/// Writes manifest.json into `dir`, hashing every listed output.
void write_manifest(const std::filesystem::path& dir, const RunManifest& manifest);

}  // namespace entrack::io
