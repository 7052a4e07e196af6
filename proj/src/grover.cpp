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
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "entrack/error.hpp"
#include "entrack/scenarios.hpp"

namespace entrack {

std::uint64_t grover_iterations(int n, std::uint64_t marked) {
  if (n < 1 || n > 62) throw InvalidInput("grover_iterations: n out of range");
  const std::uint64_t space = std::uint64_t{1} << n;
  if (marked < 1 || marked >= space) throw DomainError("grover_iterations: need 1 <= M < 2^n");
  return static_cast<std::uint64_t>(
      std::floor(std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(space) / marked)));
}

namespace {

void check_shape(const GroverOracle& o) {
  if (o.search_qubits < 1 || o.total_qubits <= o.search_qubits)
    throw InvalidInput("oracle needs 1 <= search_qubits < total_qubits");
  if (o.total_qubits > kDefaultMaxQubits) {
    std::ostringstream os;
    os << "oracle '" << o.name << "' needs " << o.total_qubits << " qubits; the limit is "
       << kDefaultMaxQubits;
    throw InvalidInput(os.str());
  }
  if (!o.prepare || !o.compute || !o.mark || !o.uncompute)
    throw InvalidInput("oracle '" + o.name + "' is missing a stage");
}

void apply_oracle(const GroverOracle& o, StateVector& s) {
  o.compute(s);
  o.mark(s);
  o.uncompute(s);
}

void diffusion(StateVector& s, int search) {
  for (int q = 0; q < search; ++q) s.apply_1q(q, gates::hadamard());
  for (int q = 0; q < search; ++q) s.apply_1q(q, gates::pauli_x());
  std::vector<int> controls(static_cast<std::size_t>(search - 1));
  std::iota(controls.begin(), controls.end(), 0);
  s.apply_controlled(controls, UnitaryOp{search - 1, gates::pauli_z()});
  for (int q = 0; q < search; ++q) s.apply_1q(q, gates::pauli_x());
  for (int q = 0; q < search; ++q) s.apply_1q(q, gates::hadamard());
}

}  // namespace

std::vector<std::uint64_t> verify_oracle(const GroverOracle& oracle) {
  check_shape(oracle);
  if (oracle.total_qubits > kOracleSweepMaxQubits) {
    if (!oracle.marked || oracle.marked->empty())
      throw InvalidInput("oracle '" + oracle.name + "' is too large for a basis sweep and lists no marked inputs");
    const std::uint64_t space = std::uint64_t{1} << oracle.search_qubits;
    for (auto m : *oracle.marked)
      if (m >= space) throw InvalidInput("marked input outside the search space");
    if (oracle.marked->size() >= space)
      throw ContractViolation("oracle '" + oracle.name + "' marks every input");
    return *oracle.marked;
  }
  std::vector<std::uint64_t> marked;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << oracle.search_qubits); ++x) {
    StateVector expected = StateVector::basis(oracle.total_qubits, x);
    oracle.prepare(expected);
    StateVector out = expected;
    apply_oracle(oracle, out);
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < out.dimension(); ++i) overlap += std::conj(expected[i]) * out[i];
    if (std::abs(overlap - 1.0) < 1e-9) continue;
    if (std::abs(overlap + 1.0) < 1e-9) {
      marked.push_back(x);
      continue;
    }
    std::ostringstream os;
    os << "oracle '" << oracle.name << "' is not a phase flip on input " << x
       << " (overlap " << overlap.real() << (overlap.imag() < 0 ? "" : "+") << overlap.imag()
       << "i)";
    throw ContractViolation(os.str());
  }
  if (marked.empty()) throw ContractViolation("oracle '" + oracle.name + "' marks nothing");
  if (marked.size() == (std::uint64_t{1} << oracle.search_qubits))
    throw ContractViolation("oracle '" + oracle.name + "' marks every input");
  if (oracle.marked) {
    auto declared = *oracle.marked;
    std::sort(declared.begin(), declared.end());
    if (declared != marked)
      throw ContractViolation("oracle '" + oracle.name + "' marks a different set than declared");
  }
  return marked;
}

GroverOracle ec_oracle(const ECInstance& inst) {
  inst.validate();
  if (inst.clauses.empty()) throw InvalidInput("exact cover instance has no clauses");
  const int n = inst.n;
  const int c = static_cast<int>(inst.clauses.size());
  const int phase = n + c;
  GroverOracle o;
  o.name = "exact-cover";
  o.search_qubits = n;
  o.total_qubits = n + c + 1;
  o.prepare = [phase](StateVector& s) {
    s.apply_1q(phase, gates::pauli_x());
    s.apply_1q(phase, gates::hadamard());
  };
  auto clause_block = [inst, n](StateVector& s, bool reverse) {
    const int c = static_cast<int>(inst.clauses.size());
    for (int idx = 0; idx < c; ++idx) {
      const int k = reverse ? c - 1 - idx : idx;
      const auto& cl = inst.clauses[static_cast<std::size_t>(k)];
      const int anc = n + k;
      if (reverse) s.apply_controlled({cl[0], cl[1], cl[2]}, XOp{anc});
      for (int v : cl) s.apply_controlled({v}, XOp{anc});
      if (!reverse) s.apply_controlled({cl[0], cl[1], cl[2]}, XOp{anc});
    }
  };
  o.compute = [clause_block](StateVector& s) { clause_block(s, false); };
  o.uncompute = [clause_block](StateVector& s) { clause_block(s, true); };
  o.mark = [n, c, phase](StateVector& s) {
    std::vector<int> controls(static_cast<std::size_t>(c));
    std::iota(controls.begin(), controls.end(), n);
    s.apply_controlled(controls, XOp{phase});
  };
  const auto sols = inst.solutions();
  if (sols.empty()) throw InvalidInput("exact cover instance has no solution");
  o.marked = sols;
  return o;
}

GroverResult grover_trajectory(const GroverOracle& oracle, std::uint64_t seed) {
  GroverResult r;
  r.marked = verify_oracle(oracle);
  const int s = oracle.search_qubits;
  r.iterations = grover_iterations(s, r.marked.size());

  std::vector<int> search(static_cast<std::size_t>(s));
  std::iota(search.begin(), search.end(), 0);
  const Bipartition part = Bipartition::make(oracle.total_qubits, search);

  Trajectory& t = r.trajectory;
  t.scenario = "grover";
  t.echo("oracle", oracle.name);
  t.echo("search_qubits", std::to_string(s));
  t.echo("total_qubits", std::to_string(oracle.total_qubits));
  t.echo("marked", std::to_string(r.marked.size()));
  t.echo("iterations", std::to_string(r.iterations));
  t.echo("seed", std::to_string(seed));
  t.seeds.push_back(seed);

  StateVector state = StateVector::basis(oracle.total_qubits, 0);
  for (int q = 0; q < s; ++q) state.apply_1q(q, gates::hadamard());
  oracle.prepare(state);
  t.append(trajectory_point(state, part, "initial"));
  for (std::uint64_t it = 1; it <= r.iterations; ++it) {
    const std::string tag = "it=" + std::to_string(it) + "|";
    oracle.compute(state);
    t.append(trajectory_point(state, part, tag + "pre-mark"));
    oracle.mark(state);
    t.append(trajectory_point(state, part, tag + "post-mark"));
    oracle.uncompute(state);
    t.append(trajectory_point(state, part, tag + "post-uncompute"));
    diffusion(state, s);
    t.append(trajectory_point(state, part, tag + "post-diffusion"));
  }

  const std::unordered_set<std::uint64_t> hits(r.marked.begin(), r.marked.end());
  const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  for (std::size_t i = 0; i < state.dimension(); ++i)
    if (hits.count(i & mask)) r.success_probability += std::norm(state[i]);
  return r;
}

GroverResult grover_ec_trajectory(const ECInstance& inst, std::uint64_t seed) {
  return grover_trajectory(ec_oracle(inst), seed);
}

}  // namespace entrack
