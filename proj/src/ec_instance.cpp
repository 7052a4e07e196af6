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

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "entrack/error.hpp"
#include "entrack/rng.hpp"
#include "entrack/scenarios.hpp"

namespace entrack {

namespace {
constexpr int kMaxInstanceBits = 24;

int clause_ones(const std::array<int, 3>& c, std::uint64_t z) {
  return static_cast<int>(((z >> c[0]) & 1u) + ((z >> c[1]) & 1u) + ((z >> c[2]) & 1u));
}
}  // namespace

void ECInstance::validate() const {
  if (n < 3 || n > kMaxInstanceBits) {
    std::ostringstream os;
    os << "exact cover instance needs 3 <= n <= " << kMaxInstanceBits << ", got " << n;
    throw InvalidInput(os.str());
  }
  for (const auto& c : clauses) {
    for (int v : c)
      if (v < 0 || v >= n) throw InvalidInput("clause index out of range");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw InvalidInput("clause indices must be distinct");
  }
  if (known_solution) {
    if (*known_solution >> n) throw InvalidInput("known solution has bits beyond n");
    if (!satisfies(*known_solution)) throw InvalidInput("known solution violates a clause");
  }
}

double ECInstance::penalty(std::uint64_t z) const {
  double p = 0.0;
  for (const auto& c : clauses) {
    const int d = clause_ones(c, z) - 1;
    p += d * d;
  }
  return p;
}

bool ECInstance::satisfies(std::uint64_t z) const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [z](const auto& c) { return clause_ones(c, z) == 1; });
}

std::vector<std::uint64_t> ECInstance::solutions() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z)
    if (satisfies(z)) out.push_back(z);
  return out;
}

std::string solution_bits(std::uint64_t z, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((z >> i) & 1u) s[static_cast<std::size_t>(n - 1 - i)] = '1';
  return s;
}

ECInstance ECInstance::parse(std::istream& in) {
  ECInstance inst;
  std::string line;
  std::size_t expected = 0;
  bool header = false;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << "instance line " << lineno << ": " << what;
    throw InvalidInput(os.str());
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream cs(line.substr(first + 1));
      std::string key, bits;
      if (cs >> key && key == "solution") {
        if (!(cs >> bits)) fail("solution comment without bits");
        std::uint64_t z = 0;
        for (char ch : bits) {
          if (ch != '0' && ch != '1') fail("solution must be a bitstring");
          z = (z << 1) | static_cast<std::uint64_t>(ch - '0');
        }
        if (header && bits.size() != static_cast<std::size_t>(inst.n))
          fail("solution length differs from n");
        inst.known_solution = z;
      }
      continue;
    }
    std::istringstream ls(line);
    if (!header) {
      long long n = 0, c = 0;
      if (!(ls >> n >> c) || n < 1 || c < 0) fail("expected `n c`");
      inst.n = static_cast<int>(n);
      expected = static_cast<std::size_t>(c);
      header = true;
      continue;
    }
    std::array<int, 3> c{};
    if (!(ls >> c[0] >> c[1] >> c[2])) fail("expected three clause indices");
    std::string extra;
    if (ls >> extra) fail("trailing tokens after clause");
    inst.clauses.push_back(c);
  }
  if (!header) throw InvalidInput("instance has no `n c` header");
  if (inst.clauses.size() != expected) {
    std::ostringstream os;
    os << "instance declares " << expected << " clauses but lists " << inst.clauses.size();
    throw InvalidInput(os.str());
  }
  inst.validate();
  return inst;
}

ECInstance ECInstance::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file " + path.string());
  return parse(in);
}

void ECInstance::write(std::ostream& out) const {
  out << n << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
  if (known_solution) out << "# solution " << solution_bits(*known_solution, n) << '\n';
}

namespace {

std::array<int, 3> random_clause(int n, RngStream& rng) {
  std::array<int, 3> c{};
  for (int k = 0; k < 3; ++k) {
    bool fresh = false;
    while (!fresh) {
      c[k] = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
      fresh = std::find(c.begin(), c.begin() + k, c[k]) == c.begin() + k;
    }
  }
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

ECInstance generate_instance(int n, std::uint64_t seed, int clauses) {
  if (n < 3 || n > 16) throw InvalidInput("instance generation supports 3 <= n <= 16");
  if (clauses < 0) throw InvalidInput("clause count must be non-negative");
  RngStream rng(seed);
  const std::uint64_t dim = std::uint64_t{1} << n;
  constexpr int kMaxAttempts = 1'000'000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    ECInstance inst;
    inst.n = n;
    std::vector<std::uint64_t> alive(dim);
    for (std::uint64_t z = 0; z < dim; ++z) alive[z] = z;
    const int limit = clauses > 0 ? clauses : 4 * n * n;
    while (static_cast<int>(inst.clauses.size()) < limit && !alive.empty()) {
      auto c = random_clause(n, rng);
      if (std::find(inst.clauses.begin(), inst.clauses.end(), c) != inst.clauses.end()) continue;
      inst.clauses.push_back(c);
      std::erase_if(alive, [&](std::uint64_t z) { return clause_ones(c, z) != 1; });
      if (clauses == 0 && alive.size() <= 1) break;
    }
    if (alive.size() == 1) {
      inst.known_solution = alive.front();
      inst.validate();
      return inst;
    }
  }
  throw Error("could not generate an exact cover instance with a unique solution");
}

std::vector<double> penalty_diagonal(const ECInstance& inst) {
  inst.validate();
  std::vector<double> hp(std::size_t{1} << inst.n);
  for (std::uint64_t z = 0; z < hp.size(); ++z) hp[z] = inst.penalty(z);
  return hp;
}

ECHamiltonians ec_hamiltonians(const ECInstance& inst) {
  if (inst.clauses.empty()) throw InvalidInput("exact cover instance has no clauses");
  if (inst.n > kMaxAdiabaticQubits) {
    std::ostringstream os;
    os << "adiabatic evolution supports at most " << kMaxAdiabaticQubits << " bits";
    throw InvalidInput(os.str());
  }
  return {inst.n, penalty_diagonal(inst)};
}

void Trajectory::append(TrajectoryPoint p) {
  p.sequence = points.size();
  if (!tight_contained(p)) {
    std::ostringstream os;
    os.precision(17);
    os << scenario << " point '" << p.label << "' (lambda0 = " << p.lambda0
       << ", E = " << p.entropy << ") lies outside the tight region";
    throw ContractViolation(os.str());
  }
  points.push_back(std::move(p));
}

void Trajectory::echo(std::string key, std::string value) {
  config.emplace_back(std::move(key), std::move(value));
}

}  // namespace entrack
