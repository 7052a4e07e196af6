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

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entrack/spectral.hpp"
#include "entrack/statevector.hpp"

namespace entrack {

/// Ordered checkpoints of one run plus what is needed to reproduce it.
struct Trajectory {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> config;  ///< echo, in insertion order
  std::vector<TrajectoryPoint> points;
  std::vector<std::uint64_t> seeds;

  /// Appends with the next sequence number. Throws ContractViolation when the
  /// point lies outside the tight region.
  void append(TrajectoryPoint p);
  void echo(std::string key, std::string value);
};

// --- Exact Cover ----------------------------------------------------------------

struct ECInstance {
  int n = 0;
  std::vector<std::array<int, 3>> clauses;
  std::optional<std::uint64_t> known_solution;  ///< bit i = variable i

  void validate() const;
  /// Number of violated clauses weighted by (b_i + b_j + b_k - 1)^2.
  double penalty(std::uint64_t z) const;
  bool satisfies(std::uint64_t z) const;
  /// All satisfying assignments, by enumeration.
  std::vector<std::uint64_t> solutions() const;

  /// Text format: `n c`, then c lines of three 0-based indices. A line
  /// `# solution <bits>` (most significant variable first) is optional.
  static ECInstance parse(std::istream& in);
  static ECInstance load(const std::filesystem::path& path);
  void write(std::ostream& out) const;
};

std::string solution_bits(std::uint64_t z, int n);

/// Adds random clauses until exactly one assignment remains; restarts when the
/// instance becomes unsatisfiable. With `clauses` > 0 the count is fixed and
/// whole instances are redrawn until the solution is unique.
ECInstance generate_instance(int n, std::uint64_t seed, int clauses = 0);

struct ECHamiltonians {
  int n = 0;
  std::vector<double> hp;  ///< diagonal of the problem Hamiltonian
  // H0 = sum_i (1 - sigma^x_i) / 2 is applied matrix-free.
};

/// Problem diagonal for any clause list, including the empty one.
std::vector<double> penalty_diagonal(const ECInstance& inst);
/// Throws InvalidInput on an empty clause list.
ECHamiltonians ec_hamiltonians(const ECInstance& inst);

/// y = ((1 - s) H0 + s Hp) x.
void apply_interpolated(const ECHamiltonians& h, double s, std::span<const double> x,
                        std::span<double> y);

struct GroundState {
  double energy = 0.0;
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> vector;
};

inline constexpr int kMaxAdiabaticQubits = 14;

/// Lowest eigenpair of H_s by restarted Lanczos with full
/// reorthogonalisation. The start vector is positive and seeded.
GroundState ec_ground_state(const ECHamiltonians& h, double s, std::uint64_t seed = 0,
                            double tol = 1e-8);
StateVector ec_ground_state(const ECInstance& inst, double s, std::uint64_t seed = 0);

struct AdiabaticOptions {
  double s_step = 0.1;
  int partitions = 3;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Seeded half-split: shuffle the qubit indices, the first n/2 form A.
Bipartition random_half_split(int n, std::uint64_t seed);

/// One point per (s, partition); s is the outer loop.
Trajectory adiabatic_trajectory(const ECInstance& inst, const AdiabaticOptions& opts);

// --- Grover ---------------------------------------------------------------------

std::uint64_t grover_iterations(int n, std::uint64_t marked);

/// A phase oracle split into the stages the checkpoints are placed around.
/// The driver puts the search register (qubits [0, search_qubits)) into the
/// uniform superposition; `prepare` sets up the ancillas once.
struct GroverOracle {
  std::string name;
  int total_qubits = 0;
  int search_qubits = 0;
  std::function<void(StateVector&)> prepare;
  std::function<void(StateVector&)> compute;
  std::function<void(StateVector&)> mark;
  std::function<void(StateVector&)> uncompute;
  /// Required above kOracleSweepMaxQubits, where the basis sweep is skipped.
  std::optional<std::vector<std::uint64_t>> marked;
};

inline constexpr int kOracleSweepMaxQubits = 12;

/// Basis sweep: every search input must come back as +/- itself with the
/// ancillas restored. Returns the inputs that pick up a sign.
std::vector<std::uint64_t> verify_oracle(const GroverOracle& oracle);

/// Search register of n qubits, one ancilla per clause, one phase ancilla.
GroverOracle ec_oracle(const ECInstance& inst);

struct GroverResult {
  Trajectory trajectory;
  std::uint64_t iterations = 0;
  std::vector<std::uint64_t> marked;
  double success_probability = 0.0;
};

/// Initial point, then per iteration: pre-mark, post-mark, post-uncompute,
/// post-diffusion. Search register versus the rest.
GroverResult grover_trajectory(const GroverOracle& oracle, std::uint64_t seed);
GroverResult grover_ec_trajectory(const ECInstance& inst, std::uint64_t seed);

// --- Shor -------------------------------------------------------------------------

struct ShorConfig {
  std::uint64_t N = 15;
  std::uint64_t a = 7;
  std::uint64_t seed = 0;

  int bits() const;
  int total_qubits() const { return 2 * bits() + 3; }
  /// N odd composite, not a prime power, at most 64; 1 < a < N.
  void validate() const;
};

/// Qubit layout of the 2n+3 register.
struct ShorLayout {
  int n;
  int x(int k) const { return k; }
  int b(int k) const { return n + k; }
  int overflow() const { return 2 * n + 1; }
  int control() const { return 2 * n + 2; }
};

/// Controlled (x, b) -> (x, b + m x mod N) on x < N, b < N; identity elsewhere.
void controlled_multiply_add(StateVector& state, const ShorLayout& layout, std::uint64_t N,
                             std::uint64_t m, bool inverse);
void controlled_swap_registers(StateVector& state, const ShorLayout& layout);

struct ShorResult {
  Trajectory trajectory;
  bool short_circuit = false;
  bool success = false;
  std::vector<std::uint64_t> factors;
  std::vector<int> bits;          ///< measured control bits, round order
  std::uint64_t measured = 0;     ///< sum bits[i] 2^i
  std::optional<std::uint64_t> order;
  std::string failure;
};

ShorResult shor_trajectory(const ShorConfig& cfg);

/// Continued-fraction convergent denominators of y / 2^q below N.
std::vector<std::uint64_t> convergent_denominators(std::uint64_t y, int q, std::uint64_t N);
/// Smallest r among convergent denominators and their multiples up to
/// bit_width(N) times with a^r = 1 mod N. Nothing for y = 0.
std::optional<std::uint64_t> order_from_phase(std::uint64_t y, int q, std::uint64_t a,
                                              std::uint64_t N);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t mod);

// --- k-almost primes --------------------------------------------------------------

enum class PrimeKind { P, U };

struct PrimeStateSpec {
  int n = 4;
  PrimeKind kind = PrimeKind::P;
  int k = 1;
};

/// Number of prime factors with multiplicity for every x < limit (0 for x < 2).
std::vector<int> omega_table(std::uint64_t limit);
int omega(std::uint64_t x);

inline constexpr int kMaxPrimeQubits = 20;

std::vector<std::uint64_t> prime_support(const PrimeStateSpec& spec);
StateVector prime_state(const PrimeStateSpec& spec);

/// For k = 1..n-1: P_k then U_k under the natural bipartition, each followed
/// by its QFT image when `with_qft`.
Trajectory prime_trajectory(int n, bool with_qft);

}  // namespace entrack
