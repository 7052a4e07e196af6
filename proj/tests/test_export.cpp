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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "entrack/error.hpp"
#include "entrack/export.hpp"
#include "entrack/scenarios.hpp"

using namespace entrack;
namespace fs = std::filesystem;

TEST_SUITE("export") {
  TEST_CASE("trajectory header is fixed") {
    CHECK(io::trajectory_csv_header(kDefaultRenyiDegrees) ==
          "scenario,label,sequence,alpha,beta,lambda0,entropy_vn,gap,renyi_2,renyi_3");
    const std::vector<double> more = {2.0, 3.0, 4.0};
    CHECK(io::trajectory_csv_header(more).ends_with(",renyi_3,renyi_4"));
  }

  TEST_CASE("doubles survive a text round-trip") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-30, 30);
    for (int i = 0; i < 1000; ++i) {
      const double v = std::exp(u(gen)) * (i % 2 ? -1 : 1);
      CHECK(io::parse_double(io::format_double(v)) == v);
    }
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(io::format_double(inf) == "inf");
    CHECK(io::format_double(-inf) == "-inf");
    CHECK(io::parse_double("inf") == inf);
    CHECK(std::isnan(io::parse_double("nan")));
    CHECK(io::format_double(0.5) == "0.5");
    CHECK_THROWS_AS(io::parse_double("0.5x"), InvalidInput);
    CHECK_THROWS_AS(io::parse_double(""), InvalidInput);
  }

  TEST_CASE("trajectory CSV round-trip") {
    const auto t = prime_trajectory(6, true);
    std::ostringstream out;
    io::write_trajectory_csv(out, std::span<const Trajectory>(&t, 1));
    std::istringstream in(out.str());
    const auto rows = io::read_trajectory_csv(in);
    REQUIRE(rows.size() == t.points.size());
    bool saw_inf = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& p = t.points[i];
      CHECK(rows[i].scenario == t.scenario);
      CHECK(rows[i].label == p.label);
      CHECK(rows[i].sequence == p.sequence);
      CHECK(rows[i].alpha == p.alpha);
      CHECK(rows[i].beta == p.beta);
      CHECK(rows[i].lambda0 == p.lambda0);
      CHECK(rows[i].entropy == p.entropy);
      CHECK(rows[i].gap == p.gap);
      saw_inf |= std::isinf(p.gap);
      REQUIRE(rows[i].renyi.size() == 2);
      CHECK(rows[i].renyi[0].second == p.renyi_at(2.0));
    }
    CHECK(saw_inf);
  }

  TEST_CASE("malformed trajectory CSV") {
    std::istringstream wrong_header("a,b\n1,2\n");
    CHECK_THROWS_AS(io::read_trajectory_csv(wrong_header), InvalidInput);
    std::istringstream short_row(
        "scenario,label,sequence,alpha,beta,lambda0,entropy_vn,gap,renyi_2,renyi_3\nx,y,0,2\n");
    CHECK_THROWS_AS(io::read_trajectory_csv(short_row), InvalidInput);
  }

  TEST_CASE("trajectory JSON carries points and curves") {
    const auto t = prime_trajectory(4, false);
    const boundaries::CurveParams params{4, 4, 1, 2};
    const auto grid = boundaries::default_grid(boundaries::CurveName::F1, params, 50);
    const std::vector<boundaries::BoundaryCurve> curves = {
        boundaries::sample_curve(boundaries::CurveName::F1, params, grid)};
    const auto j = nlohmann::json::parse(io::trajectory_json(std::span<const Trajectory>(&t, 1), curves));
    REQUIRE(j["trajectories"].size() == 1);
    CHECK(j["trajectories"][0]["points"].size() == t.points.size());
    CHECK(j["trajectories"][0]["points"][0].contains("entropy_vn"));
    CHECK(j["trajectories"][0]["points"][0].contains("renyi_2"));
    CHECK(j["boundaries"].contains("f1"));
    CHECK(j["boundaries"]["f1"]["x"].size() == 50);
  }

  TEST_CASE("curve CSV") {
    const boundaries::CurveParams params{16, 64, 1, 2};
    const auto c = boundaries::sample_curve(boundaries::CurveName::FlexibleE, params,
                                            boundaries::default_grid(boundaries::CurveName::FlexibleE, params, 20));
    std::ostringstream out;
    io::write_curve_csv(out, c);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "curve,alpha,beta,sigma,degree,x,y,extrapolated,page_endpoint");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 20);
  }

  TEST_CASE("tables") {
    std::ostringstream out;
    io::write_table_csv(out, {{"a", "b"}, {{1, 2.5}, {3, -1}}});
    CHECK(out.str() == "a,b\n1,2.5\n3,-1\n");
    std::ostringstream bad;
    CHECK_THROWS_AS(io::write_table_csv(bad, {{"a", "b"}, {{1}}}), InvalidInput);
  }

  TEST_CASE("SHA-256 digests") {
    const fs::path dir = fs::temp_directory_path() / "entrack_export_test";
    fs::create_directories(dir);
    const fs::path f = dir / "abc.txt";
    { std::ofstream(f) << "abc"; }
    CHECK(io::sha256_file(f) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    { std::ofstream(f, std::ios::trunc); }
    CHECK(io::sha256_file(f) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    io::RunManifest m;
    m.command = "entrack test";
    m.outputs = {f};
    m.seeds = {7};
    io::write_manifest(dir, m);
    std::ifstream in(dir / "manifest.json");
    const auto j = nlohmann::json::parse(in);
    CHECK(j["outputs"]["abc.txt"] == io::sha256_file(f));
    CHECK(j["seeds"][0] == 7);
    fs::remove_all(dir);
    CHECK_THROWS_AS(io::sha256_file(dir / "missing"), Error);
  }

  TEST_CASE("timestamps are ISO 8601 UTC") {
    const auto ts = io::utc_timestamp();
    CHECK(ts.size() == 20);
    CHECK(ts[10] == 'T');
    CHECK(ts.back() == 'Z');
  }
}
