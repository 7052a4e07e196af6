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
#include <sstream>

#include "entrack/error.hpp"
#include "entrack/scenarios.hpp"

namespace entrack {

std::vector<int> omega_table(std::uint64_t limit) {
  std::vector<std::uint32_t> spf(limit, 0);
  std::vector<int> out(limit, 0);
  for (std::uint64_t x = 2; x < limit; ++x) {
    if (spf[x] == 0)
      for (std::uint64_t m = x; m < limit; m += x)
        if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(x);
    out[x] = out[x / spf[x]] + 1;
  }
  return out;
}

int omega(std::uint64_t x) {
  if (x < 2) throw DomainError("omega is defined for x >= 2");
  int count = 0;
  for (std::uint64_t p = 2; p * p <= x; ++p)
    while (x % p == 0) {
      x /= p;
      ++count;
    }
  return count + (x > 1 ? 1 : 0);
}

namespace {
void check_spec(const PrimeStateSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxPrimeQubits) {
    std::ostringstream os;
    os << "prime states support 2 <= n <= " << kMaxPrimeQubits << ", got " << spec.n;
    throw InvalidInput(os.str());
  }
  if (spec.k < 1 || spec.k > spec.n - 1) throw InvalidInput("prime state needs 1 <= k <= n - 1");
}

std::vector<std::uint64_t> support_from(const std::vector<int>& om, PrimeKind kind, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 2; x < om.size(); ++x)
    if (kind == PrimeKind::P ? om[x] == k : om[x] <= k) out.push_back(x);
  return out;
}

StateVector uniform_over(const std::vector<std::uint64_t>& support, int n) {
  if (support.empty()) throw DomainError("prime state has empty support");
  std::vector<cplx> amps(std::size_t{1} << n, 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(support.size()));
  for (auto x : support) amps[x] = a;
  return StateVector::from_amplitudes(std::move(amps));
}
}  // namespace

std::vector<std::uint64_t> prime_support(const PrimeStateSpec& spec) {
  check_spec(spec);
  return support_from(omega_table(std::uint64_t{1} << spec.n), spec.kind, spec.k);
}

StateVector prime_state(const PrimeStateSpec& spec) {
  return uniform_over(prime_support(spec), spec.n);
}

Trajectory prime_trajectory(int n, bool with_qft) {
  if (n < 2 || n % 2 != 0 || n > kMaxPrimeQubits)
    throw InvalidInput("prime trajectory needs an even n in [2, 20]");
  const auto om = omega_table(std::uint64_t{1} << n);
  const Bipartition part = Bipartition::natural(n);
  Trajectory t;
  t.scenario = "primes";
  t.echo("n", std::to_string(n));
  t.echo("qft", with_qft ? "true" : "false");
  for (int k = 1; k <= n - 1; ++k) {
    for (PrimeKind kind : {PrimeKind::P, PrimeKind::U}) {
      const std::string name = (kind == PrimeKind::P ? "P_" : "U_") + std::to_string(k);
      StateVector psi = uniform_over(support_from(om, kind, k), n);
      t.append(trajectory_point(psi, part, name));
      if (with_qft) {
        psi.apply_qft();
        t.append(trajectory_point(psi, part, name + "|qft"));
      }
    }
  }
  return t;
}

}  // namespace entrack
