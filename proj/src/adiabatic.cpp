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

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "entrack/error.hpp"
#include "entrack/parallel.hpp"
#include "entrack/rng.hpp"
#include "entrack/scenarios.hpp"

namespace entrack {

void apply_interpolated(const ECHamiltonians& h, double s, std::span<const double> x,
                        std::span<double> y) {
  const std::size_t dim = h.hp.size();
  if (x.size() != dim || y.size() != dim) throw InvalidInput("apply_interpolated: size mismatch");
  const double diag0 = 0.5 * h.n * (1.0 - s);
  const double flip = -0.5 * (1.0 - s);
  for (std::size_t z = 0; z < dim; ++z) {
    double acc = (diag0 + s * h.hp[z]) * x[z];
    if (flip != 0.0)
      for (int i = 0; i < h.n; ++i) acc += flip * x[z ^ (std::size_t{1} << i)];
    y[z] = acc;
  }
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Lowest eigenpair of the symmetric tridiagonal matrix (d, e).
std::pair<double, std::vector<double>> lowest_tridiagonal(std::vector<double> d,
                                                          std::vector<double> e) {
  const lapack_int m = static_cast<lapack_int>(d.size());
  std::vector<double> z(d.size() * d.size());
  e.resize(std::max<std::size_t>(d.size(), 1));
  const lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', m, d.data(), e.data(), z.data(), m);
  if (info != 0) throw ConvergenceError("tridiagonal eigensolver failed", 0.0, 0.0);
  return {d[0], std::vector<double>(z.begin(), z.begin() + m)};
}

}  // namespace

GroundState ec_ground_state(const ECHamiltonians& h, double s, std::uint64_t seed, double tol) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("interpolation parameter must lie in [0, 1]");
  const std::size_t dim = h.hp.size();
  const std::size_t krylov = std::min<std::size_t>(dim, 160);
  constexpr int kMaxRestarts = 60;

  std::vector<double> v(dim);
  RngStream rng(seed);
  for (double& x : v) x = 0.5 + 0.5 * rng.uniform();
  const double vn = norm(v);
  for (double& x : v) x /= vn;

  GroundState out;
  std::vector<double> w(dim);
  double residual = 0.0;
  double theta = 0.0;
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    std::vector<std::vector<double>> basis{v};
    std::vector<double> alphas, betas;
    for (std::size_t j = 0; j < krylov; ++j) {
      apply_interpolated(h, s, basis[j], w);
      ++out.iterations;
      alphas.push_back(dot(w, basis[j]));
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) {
          const double c = dot(w, q);
          for (std::size_t z = 0; z < dim; ++z) w[z] -= c * q[z];
        }
      const double b = norm(w);
      if (j + 1 == krylov || b < 1e-12 * std::max(1.0, std::abs(alphas.back()))) break;
      betas.push_back(b);
      std::vector<double> next(dim);
      for (std::size_t z = 0; z < dim; ++z) next[z] = w[z] / b;
      basis.push_back(std::move(next));
    }
    betas.resize(alphas.size() > 0 ? alphas.size() - 1 : 0);
    auto [value, coeffs] = lowest_tridiagonal(alphas, betas);
    theta = value;
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      for (std::size_t z = 0; z < dim; ++z) v[z] += coeffs[k] * basis[k][z];
    const double rn = norm(v);
    for (double& x : v) x /= rn;
    apply_interpolated(h, s, v, w);
    theta = dot(v, w);
    for (std::size_t z = 0; z < dim; ++z) w[z] -= theta * v[z];
    residual = norm(w);
    if (residual <= tol) {
      // Perron-Frobenius: the ground state of this stoquastic H is positive.
      if (std::accumulate(v.begin(), v.end(), 0.0) < 0.0)
        for (double& x : v) x = -x;
      out.energy = theta;
      out.residual = residual;
      out.vector = std::move(v);
      return out;
    }
  }
  std::ostringstream os;
  os << "Lanczos did not converge at s = " << s << ": residual " << residual;
  throw ConvergenceError(os.str(), theta, residual);
}

StateVector ec_ground_state(const ECInstance& inst, double s, std::uint64_t seed) {
  const GroundState g = ec_ground_state(ec_hamiltonians(inst), s, seed);
  std::vector<cplx> amps(g.vector.begin(), g.vector.end());
  return StateVector::from_amplitudes(std::move(amps));
}

Bipartition random_half_split(int n, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("half-split needs an even qubit count");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  RngStream rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    const std::size_t j = rng.next_u64() % (i + 1);
    std::swap(order[i], order[j]);
  }
  order.resize(static_cast<std::size_t>(n / 2));
  std::sort(order.begin(), order.end());
  return Bipartition::make(n, order);
}

Trajectory adiabatic_trajectory(const ECInstance& inst, const AdiabaticOptions& opts) {
  if (!(opts.s_step > 0.0 && opts.s_step <= 1.0)) throw InvalidInput("s step must lie in (0, 1]");
  const double steps = std::round(1.0 / opts.s_step);
  if (std::abs(steps * opts.s_step - 1.0) > 1e-9)
    throw InvalidInput("s step must divide [0, 1] evenly");
  if (opts.partitions < 1) throw InvalidInput("need at least one partition");
  const ECHamiltonians h = ec_hamiltonians(inst);
  const auto count = static_cast<std::size_t>(steps) + 1;

  const RngStream root(opts.seed);
  std::vector<std::uint64_t> part_seeds;
  std::vector<Bipartition> parts;
  for (int p = 0; p < opts.partitions; ++p) {
    part_seeds.push_back(root.split("partition").split(static_cast<std::uint64_t>(p)).seed());
    parts.push_back(random_half_split(inst.n, part_seeds.back()));
  }
  const RngStream lanczos = root.split("lanczos");

  std::vector<std::vector<TrajectoryPoint>> slots(count);
  parallel_for(count, opts.threads, [&](std::size_t k) {
    const double s = static_cast<double>(k) / steps;
    const GroundState g = ec_ground_state(h, s, lanczos.split(k).seed());
    const StateVector psi =
        StateVector::from_amplitudes(std::vector<cplx>(g.vector.begin(), g.vector.end()));
    for (std::size_t p = 0; p < parts.size(); ++p) {
      std::ostringstream label;
      label.setf(std::ios::fixed);
      label.precision(2);
      label << "s=" << s << "|p=" << p;
      slots[k].push_back(trajectory_point(psi, parts[p], label.str()));
    }
  });

  Trajectory t;
  t.scenario = "adiabatic";
  t.echo("n", std::to_string(inst.n));
  t.echo("clauses", std::to_string(inst.clauses.size()));
  std::ostringstream step;
  step.precision(17);
  step << opts.s_step;
  t.echo("s_step", step.str());
  t.echo("partitions", std::to_string(opts.partitions));
  t.echo("seed", std::to_string(opts.seed));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::string sub;
    for (int q : parts[p].subsystem()) sub += (sub.empty() ? "" : " ") + std::to_string(q);
    t.echo("partition_" + std::to_string(p), sub);
  }
  t.seeds.push_back(opts.seed);
  t.seeds.insert(t.seeds.end(), part_seeds.begin(), part_seeds.end());
  for (auto& slot : slots)
    for (auto& p : slot) t.append(std::move(p));
  return t;
}

}  // namespace entrack
