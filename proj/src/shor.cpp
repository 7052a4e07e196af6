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
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "entrack/error.hpp"
#include "entrack/rng.hpp"
#include "entrack/scenarios.hpp"

namespace entrack {

namespace {
constexpr std::uint64_t kMaxShorN = 64;

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t x) {
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    return x == 1;
  }
  return false;
}
}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw DomainError("pow_mod: zero modulus");
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1u) result = static_cast<std::uint64_t>((unsigned __int128)result * base % mod);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t mod) {
  std::int64_t r0 = static_cast<std::int64_t>(mod), r1 = static_cast<std::int64_t>(a % mod);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t0);
}

int ShorConfig::bits() const { return std::bit_width(N); }

void ShorConfig::validate() const {
  std::ostringstream os;
  if (N < 15 || N > kMaxShorN) os << "N must lie in [15, " << kMaxShorN << "], got " << N;
  else if (N % 2 == 0) os << "N must be odd, got " << N;
  else if (is_prime(N)) os << "N must be composite, got prime " << N;
  else if (is_prime_power(N)) os << "N must not be a prime power, got " << N;
  else if (a <= 1 || a >= N) os << "base a must satisfy 1 < a < N, got " << a;
  const std::string msg = os.str();
  if (!msg.empty()) throw InvalidInput(msg);
}

void controlled_multiply_add(StateVector& state, const ShorLayout& layout, std::uint64_t N,
                             std::uint64_t m, bool inverse) {
  const int n = layout.n;
  const std::uint64_t xmask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t bmask = (std::uint64_t{1} << (n + 1)) - 1;
  const std::uint64_t cbit = std::uint64_t{1} << layout.control();
  const std::uint64_t shift = m % N;
  state.apply_permutation([=](std::uint64_t i) {
    if (!(i & cbit)) return i;
    const std::uint64_t x = i & xmask;
    const std::uint64_t b = (i >> n) & bmask;
    if (x >= N || b >= N) return i;
    const std::uint64_t mx = shift * x % N;
    const std::uint64_t nb = inverse ? (b + N - mx) % N : (b + mx) % N;
    return (i & ~(bmask << n)) | (nb << n);
  });
}

void controlled_swap_registers(StateVector& state, const ShorLayout& layout) {
  for (int k = 0; k < layout.n; ++k)
    state.apply_controlled({layout.control()}, SwapOp{layout.x(k), layout.b(k)});
}

std::vector<std::uint64_t> convergent_denominators(std::uint64_t y, int q, std::uint64_t N) {
  std::vector<std::uint64_t> out;
  std::uint64_t num = y, den = std::uint64_t{1} << q;
  std::uint64_t k_prev = 1, k_cur = 0;
  while (den != 0) {
    const std::uint64_t term = num / den;
    const std::uint64_t k_next = term * k_cur + k_prev;
    if (k_next >= N) break;
    if (k_next > 0 && (out.empty() || out.back() != k_next)) out.push_back(k_next);
    k_prev = k_cur;
    k_cur = k_next;
    std::tie(num, den) = std::make_pair(den, num % den);
  }
  return out;
}

std::optional<std::uint64_t> order_from_phase(std::uint64_t y, int q, std::uint64_t a,
                                              std::uint64_t N) {
  std::optional<std::uint64_t> best;
  if (y == 0) return best;
  const auto max_multiple = static_cast<std::uint64_t>(std::bit_width(N));
  for (std::uint64_t d : convergent_denominators(y, q, N))
    for (std::uint64_t r = d; r < N && r <= d * max_multiple; r += d)
      if (pow_mod(a, r, N) == 1) {
        if (!best || r < *best) best = r;
        break;
      }
  return best;
}

ShorResult shor_trajectory(const ShorConfig& cfg) {
  cfg.validate();
  ShorResult res;
  const int n = cfg.bits();
  Trajectory& t = res.trajectory;
  t.scenario = "shor";
  t.echo("N", std::to_string(cfg.N));
  t.echo("a", std::to_string(cfg.a));
  t.echo("n", std::to_string(n));
  t.echo("total_qubits", std::to_string(cfg.total_qubits()));
  t.echo("seed", std::to_string(cfg.seed));
  t.seeds.push_back(cfg.seed);

  const std::uint64_t g = std::gcd(cfg.a, cfg.N);
  if (g != 1) {
    res.short_circuit = true;
    res.success = true;
    res.factors = {g, cfg.N / g};
    std::sort(res.factors.begin(), res.factors.end());
    return res;
  }

  const ShorLayout layout{n};
  std::vector<int> xreg(static_cast<std::size_t>(n));
  std::iota(xreg.begin(), xreg.end(), 0);
  const Bipartition part = Bipartition::make(cfg.total_qubits(), xreg);

  RngStream rng(cfg.seed);
  StateVector state = StateVector::basis(cfg.total_qubits(), 1);
  const int rounds = 2 * n;
  for (int i = 0; i < rounds; ++i) {
    const std::uint64_t m = pow_mod(cfg.a, std::uint64_t{1} << (rounds - 1 - i), cfg.N);
    const std::uint64_t minv = *inverse_mod(m, cfg.N);
    const std::string tag = "round=" + std::to_string(i) + "|";
    state.apply_1q(layout.control(), gates::hadamard());
    controlled_multiply_add(state, layout, cfg.N, m, false);
    t.append(trajectory_point(state, part, tag + "pre-cswap"));
    controlled_swap_registers(state, layout);
    t.append(trajectory_point(state, part, tag + "post-cswap"));
    controlled_multiply_add(state, layout, cfg.N, minv, true);
    double correction = 0.0;
    for (int l = 0; l < i; ++l)
      if (res.bits[static_cast<std::size_t>(l)])
        correction -= 2.0 * std::numbers::pi / std::ldexp(1.0, i - l + 1);
    if (correction != 0.0) state.apply_1q(layout.control(), gates::phase(correction));
    state.apply_1q(layout.control(), gates::hadamard());
    res.bits.push_back(state.measure_and_reset(layout.control(), rng));
  }
  for (int i = 0; i < rounds; ++i)
    if (res.bits[static_cast<std::size_t>(i)]) res.measured |= std::uint64_t{1} << i;

  if (res.measured == 0) {
    res.failure = "measured phase is zero";
    return res;
  }
  res.order = order_from_phase(res.measured, rounds, cfg.a, cfg.N);
  if (!res.order) {
    res.failure = "no order candidate from the continued fraction expansion";
    return res;
  }
  const std::uint64_t r = *res.order;
  if (r % 2 != 0) {
    res.failure = "order " + std::to_string(r) + " is odd";
    return res;
  }
  const std::uint64_t half = pow_mod(cfg.a, r / 2, cfg.N);
  if (half == cfg.N - 1) {
    res.failure = "a^(r/2) = -1 mod N";
    return res;
  }
  for (std::uint64_t cand : {std::gcd(half + cfg.N - 1, cfg.N), std::gcd(half + 1, cfg.N)}) {
    if (cand > 1 && cand < cfg.N) {
      res.factors = {cand, cfg.N / cand};
      std::sort(res.factors.begin(), res.factors.end());
      res.success = true;
      return res;
    }
  }
  res.failure = "gcd step produced only trivial factors";
  return res;
}

}  // namespace entrack
