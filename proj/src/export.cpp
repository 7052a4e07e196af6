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

#include "entrack/export.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "entrack/error.hpp"

namespace entrack::io {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

double parse_double(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("not a number: '" + s + "'");
  }
  if (used != s.size()) throw InvalidInput("not a number: '" + s + "'");
  return v;
}

namespace {

std::string degree_name(double d) {
  const std::string s = format_double(d);
  return "renyi_" + s;
}

std::vector<double> degrees_of(std::span<const Trajectory> trajectories) {
  std::vector<double> degrees;
  bool first = true;
  for (const auto& t : trajectories)
    for (const auto& p : t.points) {
      std::vector<double> here;
      for (const auto& [d, v] : p.renyi) here.push_back(d);
      if (first) {
        degrees = here;
        first = false;
      } else if (here != degrees) {
        throw InvalidInput("trajectories carry different Renyi degrees");
      }
    }
  return first ? std::vector<double>(kDefaultRenyiDegrees) : degrees;
}

void check_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") != std::string::npos)
    throw InvalidInput("CSV field may not contain commas, quotes or newlines: '" + s + "'");
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string trajectory_csv_header(std::span<const double> renyi_degrees) {
  std::string h = "scenario,label,sequence,alpha,beta,lambda0,entropy_vn,gap";
  for (double d : renyi_degrees) h += "," + degree_name(d);
  return h;
}

void write_trajectory_csv(std::ostream& out, std::span<const Trajectory> trajectories) {
  const auto degrees = degrees_of(trajectories);
  out << trajectory_csv_header(degrees) << '\n';
  for (const auto& t : trajectories) {
    check_field(t.scenario);
    for (const auto& p : t.points) {
      check_field(p.label);
      out << t.scenario << ',' << p.label << ',' << p.sequence << ',' << p.alpha << ','
          << p.beta << ',' << format_double(p.lambda0) << ',' << format_double(p.entropy) << ','
          << format_double(p.gap);
      for (const auto& [d, v] : p.renyi) out << ',' << format_double(v);
      out << '\n';
    }
  }
}

std::vector<CsvPoint> read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty trajectory CSV");
  const auto header = split(line);
  static const std::array<std::string, 8> fixed = {"scenario", "label",  "sequence", "alpha",
                                                   "beta",     "lambda0", "entropy_vn", "gap"};
  if (header.size() < fixed.size() || !std::equal(fixed.begin(), fixed.end(), header.begin()))
    throw InvalidInput("trajectory CSV header does not match the schema: " + line);
  std::vector<double> degrees;
  for (std::size_t c = fixed.size(); c < header.size(); ++c) {
    if (header[c].rfind("renyi_", 0) != 0)
      throw InvalidInput("unexpected trajectory CSV column '" + header[c] + "'");
    degrees.push_back(parse_double(header[c].substr(6)));
  }
  std::vector<CsvPoint> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != header.size()) {
      std::ostringstream os;
      os << "trajectory CSV line " << lineno << " has " << f.size() << " fields, expected "
         << header.size();
      throw InvalidInput(os.str());
    }
    CsvPoint p;
    try {
      p.scenario = f[0];
      p.label = f[1];
      p.sequence = std::stoull(f[2]);
      p.alpha = std::stoull(f[3]);
      p.beta = std::stoull(f[4]);
      p.lambda0 = parse_double(f[5]);
      p.entropy = parse_double(f[6]);
      p.gap = parse_double(f[7]);
      for (std::size_t k = 0; k < degrees.size(); ++k)
        p.renyi.emplace_back(degrees[k], parse_double(f[8 + k]));
    } catch (const InvalidInput& e) {
      throw InvalidInput("trajectory CSV line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception&) {
      throw InvalidInput("trajectory CSV line " + std::to_string(lineno) + ": malformed integer");
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

ordered_json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

ordered_json curve_json(const boundaries::BoundaryCurve& c) {
  ordered_json j;
  j["name"] = std::string(boundaries::curve_name(c.name));
  j["params"] = {{"alpha", c.params.alpha},
                 {"beta", c.params.beta},
                 {"sigma", c.params.sigma},
                 {"degree", c.params.degree}};
  auto xs = ordered_json::array();
  auto ys = ordered_json::array();
  for (const auto& [x, y] : c.samples) {
    xs.push_back(x);
    ys.push_back(number_or_string(y));
  }
  j["x"] = std::move(xs);
  j["y"] = std::move(ys);
  j["extrapolated"] = c.extrapolated;
  j["clipped"] = c.clipped;
  j["page_endpoint"] = c.page_endpoint ? ordered_json(*c.page_endpoint) : ordered_json(nullptr);
  return j;
}

}  // namespace

std::string trajectory_json(std::span<const Trajectory> trajectories,
                            std::span<const boundaries::BoundaryCurve> curves) {
  ordered_json root;
  auto trajs = ordered_json::array();
  for (const auto& t : trajectories) {
    ordered_json jt;
    jt["scenario"] = t.scenario;
    ordered_json cfg = ordered_json::object();
    for (const auto& [k, v] : t.config) cfg[k] = v;
    jt["config"] = std::move(cfg);
    jt["seeds"] = t.seeds;
    auto pts = ordered_json::array();
    for (const auto& p : t.points) {
      ordered_json jp;
      jp["label"] = p.label;
      jp["sequence"] = p.sequence;
      jp["alpha"] = p.alpha;
      jp["beta"] = p.beta;
      jp["lambda0"] = p.lambda0;
      jp["entropy_vn"] = p.entropy;
      jp["gap"] = number_or_string(p.gap);
      for (const auto& [d, v] : p.renyi) jp[degree_name(d)] = v;
      pts.push_back(std::move(jp));
    }
    jt["points"] = std::move(pts);
    trajs.push_back(std::move(jt));
  }
  root["trajectories"] = std::move(trajs);
  ordered_json bounds = ordered_json::object();
  for (const auto& c : curves) bounds[std::string(boundaries::curve_name(c.name))] = curve_json(c);
  root["boundaries"] = std::move(bounds);
  return root.dump(2) + "\n";
}

void write_curve_csv(std::ostream& out, const boundaries::BoundaryCurve& c) {
  out << "curve,alpha,beta,sigma,degree,x,y,extrapolated,page_endpoint\n";
  const std::string name(boundaries::curve_name(c.name));
  const std::string endpoint = c.page_endpoint ? format_double(*c.page_endpoint) : "";
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    const bool extra = i < c.extrapolated.size() && c.extrapolated[i];
    out << name << ',' << format_double(c.params.alpha) << ',' << format_double(c.params.beta)
        << ',' << format_double(c.params.sigma) << ',' << c.params.degree << ','
        << format_double(c.samples[i].first) << ',' << format_double(c.samples[i].second) << ','
        << (extra ? 1 : 0) << ',' << endpoint << '\n';
  }
}

void write_table_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    check_field(table.columns[c]);
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw InvalidInput("table row width mismatch");
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string() + " for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 initialisation failed");
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i)
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

void write_manifest(const std::filesystem::path& dir, const RunManifest& m) {
  ordered_json j;
  j["command"] = m.command;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : m.config) cfg[k] = v;
  j["config"] = std::move(cfg);
  j["seeds"] = m.seeds;
  j["version"] = m.version;
  j["started"] = m.started;
  j["finished"] = m.finished;
  ordered_json outputs = ordered_json::object();
  for (const auto& p : m.outputs) outputs[p.filename().string()] = sha256_file(p);
  j["outputs"] = std::move(outputs);
  ordered_json results = ordered_json::object();
  for (const auto& [k, v] : m.results) results[k] = v;
  j["results"] = std::move(results);
  std::ofstream out(dir / "manifest.json");
  if (!out) throw Error("cannot write " + (dir / "manifest.json").string());
  out << j.dump(2) << '\n';
}

}  // namespace entrack::io
