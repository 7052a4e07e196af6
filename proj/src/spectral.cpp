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

#include "entrack/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "entrack/boundaries.hpp"
#include "entrack/error.hpp"

namespace entrack {

ComplexMatrix coefficient_matrix(const StateVector& state, const Bipartition& part) {
  if (part.num_qubits() != state.num_qubits()) {
    std::ostringstream os;
    os << "bipartition over " << part.num_qubits() << " qubits applied to a "
       << state.num_qubits() << "-qubit state";
    throw InvalidInput(os.str());
  }
  const auto& sub = part.subsystem();
  const auto& comp = part.complement();
  ComplexMatrix m(part.alpha(), part.beta());
  const auto amps = state.amplitudes();
  const std::size_t cols = part.beta();
  auto data = m.data();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    std::uint64_t row = 0;
    for (std::size_t k = 0; k < sub.size(); ++k) row |= ((i >> sub[k]) & 1u) << k;
    std::uint64_t col = 0;
    for (std::size_t k = 0; k < comp.size(); ++k) col |= ((i >> comp[k]) & 1u) << k;
    data[row * cols + col] = amps[i];
  }
  return m;
}

ReducedDensityMatrix partial_trace(const StateVector& state, const Bipartition& part) {
  ComplexMatrix m = coefficient_matrix(state, part);
  return {part.alpha(), part.beta(), m.gram()};
}

Spectrum make_spectrum(std::vector<double> values, std::size_t alpha, std::size_t beta) {
  clamp_psd(values);
  std::sort(values.begin(), values.end(), std::greater<>());
  return {std::move(values), alpha, beta};
}

Spectrum spectrum(const ReducedDensityMatrix& rho, EigenMethod method) {
  const double tr = rho.data.trace().real();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "reduced density matrix has trace " << tr;
    throw InvalidInput(os.str());
  }
  return make_spectrum(eigvalsh(rho.data, method), rho.alpha, rho.beta);
}

double von_neumann(const Spectrum& s) {
  double e = 0.0;
  for (double v : s.values)
    if (v > 0.0) e -= v * std::log(v);
  return std::max(0.0, e);
}

double renyi(const Spectrum& s, double degree) {
  if (degree < 0.0) throw DomainError("renyi: degree must be non-negative");
  if (degree == 1.0) throw DomainError("renyi: degree 1 is the von Neumann entropy; use von_neumann");
  if (degree == 0.0) {
    const auto nonzero = std::count_if(s.values.begin(), s.values.end(),
                                       [](double v) { return v > 1e-12; });
    return std::log(static_cast<double>(std::max<std::ptrdiff_t>(nonzero, 1)));
  }
  double acc = 0.0;
  for (double v : s.values)
    if (v > 0.0) acc += std::pow(v, degree);
  return std::max(0.0, std::log(acc) / (1.0 - degree));
}

double min_entropy(const Spectrum& s) { return -std::log(s.lambda0()); }

double ent_gap(const Spectrum& s) {
  const double l1 = s.lambda1();
  if (l1 < 1e-12) return kGapInfinity;
  return std::log(s.lambda0() / l1);
}

double gap_plot_value(double gap, std::size_t alpha) {
  return std::isinf(gap) ? 2.0 * std::log(static_cast<double>(alpha)) : gap;
}

double TrajectoryPoint::renyi_at(double degree) const {
  for (const auto& [d, v] : renyi)
    if (d == degree) return v;
  throw InvalidInput("trajectory point has no Renyi value for the requested degree");
}

TrajectoryPoint point_from_spectrum(const Spectrum& s, std::string label,
                                    std::span<const double> renyi_degrees, std::size_t sequence) {
  TrajectoryPoint p;
  p.label = std::move(label);
  p.sequence = sequence;
  p.lambda0 = s.lambda0();
  p.entropy = von_neumann(s);
  p.gap = ent_gap(s);
  for (double d : renyi_degrees) p.renyi.emplace_back(d, renyi(s, d));
  p.alpha = s.alpha;
  p.beta = s.beta;
  p.spectrum = s.values;
  return p;
}

TrajectoryPoint trajectory_point(const StateVector& state, const Bipartition& part,
                                 std::string label, std::span<const double> renyi_degrees,
                                 std::size_t sequence) {
  return point_from_spectrum(spectrum(partial_trace(state, part)), std::move(label), renyi_degrees,
                             sequence);
}

std::pair<TrajectoryPoint, TrajectoryPoint> qft_compare(const StateVector& state,
                                                        const Bipartition& part,
                                                        std::span<const double> renyi_degrees) {
  TrajectoryPoint before = trajectory_point(state, part, "original", renyi_degrees, 0);
  StateVector copy = state;
  copy.apply_qft();
  TrajectoryPoint after = trajectory_point(copy, part, "qft", renyi_degrees, 1);
  return {std::move(before), std::move(after)};
}

bool tight_contained(double lambda0, double entropy, std::size_t alpha, double tol) {
  if (alpha == 0) return false;
  const double a = static_cast<double>(alpha);
  if (lambda0 < 1.0 / a - tol || lambda0 > 1.0 + tol) return false;
  if (entropy < -tol) return false;
  if (alpha == 1) return entropy <= tol;
  const double l = std::clamp(lambda0, 1.0 / a, 1.0);
  return entropy >= boundaries::f1(l) - tol && entropy <= boundaries::exact_upper(l, a) + tol;
}

}  // namespace entrack
