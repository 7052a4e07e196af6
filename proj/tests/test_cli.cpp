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

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using entrack::cli::kExitFailure;
using entrack::cli::kExitOk;
using entrack::cli::kExitUsage;

namespace {

const std::string kData = ENTRACK_DATA_DIR;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("entrack_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string str() const { return path.string(); }
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = entrack::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t data_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  return n == 0 ? 0 : n - 1;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("help and usage errors") {
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"primes"}).code == kExitUsage);
    CHECK(run({"shor", "--N", "15", "--a", "7"}).code == kExitUsage);
    CHECK(run({"boundary", "--curve", "nope"}).code == kExitUsage);
  }

  TEST_CASE("domain and input errors map to usage") {
    TempDir d("errors");
    const auto r = run({"primes", "--n", "7", "--seed", "1", "--out", d.str()});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(run({"shor", "--N", "16", "--a", "7", "--seed", "1", "--out", d.str()}).code == kExitUsage);
  }

  TEST_CASE("primes rows") {
    TempDir d("primes");
    CHECK(run({"primes", "--n", "14", "--out", d.str()}).code == kExitOk);
    CHECK(data_rows(d.path / "trajectory.csv") == 26);
    CHECK(run({"primes", "--n", "14", "--qft", "--out", d.str()}).code == kExitOk);
    CHECK(data_rows(d.path / "trajectory.csv") == 52);
    CHECK(fs::exists(d.path / "manifest.json"));
  }

  TEST_CASE("adiabatic rows and thread independence") {
    TempDir one("ad1"), four("ad4");
    const std::string inst = kData + "/instances/ec_n10_c7_s1.txt";
    REQUIRE(run({"adiabatic", "--instance", inst, "--seed", "5", "--out", one.str()}).code == kExitOk);
    REQUIRE(run({"adiabatic", "--instance", inst, "--seed", "5", "--threads", "4", "--out", four.str()})
                .code == kExitOk);
    CHECK(data_rows(one.path / "trajectory.csv") == 33);
    CHECK(slurp(one.path / "trajectory.csv") == slurp(four.path / "trajectory.csv"));
  }

  TEST_CASE("rmt output does not depend on the thread count") {
    TempDir one("rmt1"), three("rmt3");
    for (auto* d : {&one, &three}) {
      const std::string threads = d == &one ? "1" : "3";
      REQUIRE(run({"rmt", "page", "--alpha", "16", "--betas", "16,32", "--samples", "8", "--seed", "2",
                   "--threads", threads, "--out", d->str()})
                  .code == kExitOk);
    }
    CHECK(slurp(one.path / "page.csv") == slurp(three.path / "page.csv"));
  }

  TEST_CASE("validate accepts library output and rejects violations") {
    TempDir d("validate");
    REQUIRE(run({"primes", "--n", "8", "--qft", "--out", d.str()}).code == kExitOk);
    const auto ok = run({"validate", (d.path / "trajectory.csv").string()});
    CHECK(ok.code == kExitOk);
    CHECK(ok.out.find(" 0 violations") != std::string::npos);
    {
      std::ofstream f(d.path / "bad.csv");
      f << "scenario,label,sequence,alpha,beta,lambda0,entropy_vn,gap,renyi_2,renyi_3\n"
        << "x,bad,0,4,4,0.9,1.2,0.1,0.1,0.1\n";
    }
    const auto bad = run({"validate", (d.path / "bad.csv").string()});
    CHECK(bad.code == kExitFailure);
    CHECK(bad.err.find("violation") != std::string::npos);
  }

  TEST_CASE("shor manifest") {
    TempDir d("shor");
    const auto r = run({"shor", "--N", "15", "--a", "7", "--seed", "3", "--json", "--out", d.str()});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(d.path / "manifest.json");
    const auto j = nlohmann::json::parse(in);
    CHECK(j["results"].contains("factors"));
    CHECK(j["seeds"][0] == 3);
    CHECK(j["outputs"].contains("trajectory.csv"));
    CHECK(j["outputs"].contains("trajectory.json"));
    if (j["results"]["success"] == "true") CHECK(j["results"]["factors"] == "3 5");
    CHECK(data_rows(d.path / "trajectory.csv") == 16);
  }

  TEST_CASE("boundary grid") {
    TempDir d("boundary");
    REQUIRE(run({"boundary", "--curve", "f1", "--grid", "200", "--out", d.str()}).code == kExitOk);
    CHECK(data_rows(d.path / "boundary.csv") == 200);
  }

  TEST_CASE("make-instance then grover") {
    TempDir d("grover");
    const std::string inst = (d.path / "inst.txt").string();
    REQUIRE(run({"make-instance", "--n", "8", "--seed", "4", "--out", inst}).code == kExitOk);
    const auto r = run({"grover", "--instance", inst, "--seed", "1", "--out", d.str()});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("success probability") != std::string::npos);
  }
}
