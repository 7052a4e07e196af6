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

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entrack/numerics.hpp"
#include "entrack/statevector.hpp"

namespace entrack {

struct ReducedDensityMatrix {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  ComplexMatrix data;
};

/// alpha x beta amplitude matrix M with M[a][b] = <a, b | psi>, where a
/// gathers the subsystem bits (subsystem()[0] least significant) and b the
/// complement bits in ascending order.
ComplexMatrix coefficient_matrix(const StateVector& state, const Bipartition& part);

/// rho_A = M M^dagger. Never forms the 2^n x 2^n density matrix.
ReducedDensityMatrix partial_trace(const StateVector& state, const Bipartition& part);

/// Descending, clamped eigenvalues of rho. Throws DomainError on eigenvalues
/// below -1e-10 and InvalidInput if the trace is not 1 within 1e-9.
Spectrum spectrum(const ReducedDensityMatrix& rho, EigenMethod method = EigenMethod::Auto);

/// Builds a Spectrum from raw eigenvalues (any order): sorts, clamps.
Spectrum make_spectrum(std::vector<double> values, std::size_t alpha, std::size_t beta);

/// -sum lambda ln lambda, in nats.
double von_neumann(const Spectrum& s);

/// (1/(1-d)) ln sum lambda^d. d = 0 gives ln(#nonzero) with a 1e-12 threshold.
/// d = 1 throws DomainError (use von_neumann).
double renyi(const Spectrum& s, double degree);

/// -ln lambda0, the d -> infinity limit of renyi.
double min_entropy(const Spectrum& s);

inline constexpr double kGapInfinity = std::numeric_limits<double>::infinity();

/// ln(lambda0 / lambda1); kGapInfinity when lambda1 < 1e-12.
double ent_gap(const Spectrum& s);

/// Plotting convention for the gap: +infinity is drawn at 2 ln(alpha).
double gap_plot_value(double gap, std::size_t alpha);

struct TrajectoryPoint {
  std::string label;
  std::size_t sequence = 0;
  double lambda0 = 0.0;
  double entropy = 0.0;
  double gap = 0.0;
  std::vector<std::pair<double, double>> renyi;  ///< (degree, value)
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::vector<double> spectrum;

  double renyi_at(double degree) const;
};

inline const std::vector<double> kDefaultRenyiDegrees = {2.0, 3.0};

TrajectoryPoint point_from_spectrum(const Spectrum& s, std::string label,
                                    std::span<const double> renyi_degrees = kDefaultRenyiDegrees,
                                    std::size_t sequence = 0);

TrajectoryPoint trajectory_point(const StateVector& state, const Bipartition& part,
                                 std::string label,
                                 std::span<const double> renyi_degrees = kDefaultRenyiDegrees,
                                 std::size_t sequence = 0);

/// Points before and after a full-register QFT; `state` is not modified.
std::pair<TrajectoryPoint, TrajectoryPoint> qft_compare(
    const StateVector& state, const Bipartition& part,
    std::span<const double> renyi_degrees = kDefaultRenyiDegrees);

/// f1(lambda0) - tol <= E <= exact_upper(lambda0, alpha) + tol, and
/// 1/alpha - tol <= lambda0 <= 1 + tol.
bool tight_contained(double lambda0, double entropy, std::size_t alpha, double tol = 1e-9);
inline bool tight_contained(const TrajectoryPoint& p, double tol = 1e-9) {
  return tight_contained(p.lambda0, p.entropy, p.alpha, tol);
}

}  // namespace entrack
