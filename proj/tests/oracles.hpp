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

// Independent reference implementations used only by the tests. None of these
// call into the library code they check.

#pragma once

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "entrack/numerics.hpp"
#include "entrack/scenarios.hpp"
#include "entrack/statevector.hpp"

namespace oracle {

using entrack::cplx;
using Dense = std::vector<std::vector<cplx>>;

inline Dense matmul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<cplx>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i][k];
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

/// All eigenvalues of a Hermitian matrix, descending: shift to PSD, find the
/// top eigenvector by repeated squaring, take the Rayleigh quotient, deflate.
inline std::vector<double> power_eigvals(Dense a) {
  const std::size_t n = a.size();
  double fro = 0.0;
  for (const auto& row : a)
    for (auto v : row) fro += std::norm(v);
  const double shift = std::sqrt(fro) + 1.0;
  for (std::size_t i = 0; i < n; ++i) a[i][i] += shift;
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    Dense p = a;
    for (int sq = 0; sq < 60; ++sq) {
      p = matmul(p, p);
      double s = 0.0;
      for (const auto& row : p)
        for (auto v : row) s += std::norm(v);
      s = std::sqrt(s);
      if (s == 0.0) break;
      for (auto& row : p)
        for (auto& v : row) v /= s;
    }
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0.0;
      for (std::size_t r = 0; r < n; ++r) s += std::norm(p[r][c]);
      if (s > best_norm) best_norm = s, best = c;
    }
    std::vector<cplx> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = p[r][best];
    double vn = 0.0;
    for (auto x : v) vn += std::norm(x);
    vn = std::sqrt(vn);
    for (auto& x : v) x /= vn;
    cplx mu = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mu += std::conj(v[i]) * a[i][j] * v[j];
    out.push_back(mu.real() - shift);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= mu.real() * v[i] * std::conj(v[j]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// rho_A[a][a'] = sum over full basis pairs (i, j) with equal complement bits.
inline Dense dense_reduced(std::span<const cplx> psi, int n, const std::vector<int>& sub) {
  const std::size_t alpha = std::size_t{1} << sub.size();
  Dense rho(alpha, std::vector<cplx>(alpha));
  std::uint64_t submask = 0;
  for (int q : sub) submask |= std::uint64_t{1} << q;
  auto sub_index = [&](std::uint64_t i) {
    std::uint64_t r = 0;
    for (std::size_t k = 0; k < sub.size(); ++k) r |= ((i >> sub[k]) & 1u) << k;
    return r;
  };
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < dim; ++i)
    for (std::uint64_t j = 0; j < dim; ++j)
      if ((i & ~submask) == (j & ~submask))
        rho[sub_index(i)][sub_index(j)] += psi[i] * std::conj(psi[j]);
  return rho;
}

/// |x> -> 2^{-n/2} sum_y exp(+2 pi i x y / 2^n) |y>, qubit 0 least significant.
inline std::vector<cplx> dft(std::span<const cplx> psi, bool inverse = false) {
  const std::size_t dim = psi.size();
  std::vector<cplx> out(dim);
  const double sign = inverse ? -1.0 : 1.0;
  for (std::size_t y = 0; y < dim; ++y) {
    cplx acc = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
      const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>((x * y) % dim) / dim;
      acc += psi[x] * std::polar(1.0, ang);
    }
    out[y] = acc / std::sqrt(static_cast<double>(dim));
  }
  return out;
}

/// Lowest eigenpair of a real symmetric matrix (column-major, n x n) by dsyev.
inline std::pair<double, std::vector<double>> dense_ground(std::vector<double> a, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  LAPACKE_dsyev(LAPACK_COL_MAJOR, 'V', 'U', n, a.data(), n, w.data());
  return {w[0], std::vector<double>(a.begin(), a.begin() + n)};
}

/// Dense (1 - s) H0 + s Hp built entry by entry.
inline std::vector<double> dense_ec_hamiltonian(const entrack::ECInstance& inst, double s) {
  const int n = inst.n;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> h(dim * dim, 0.0);
  for (std::size_t z = 0; z < dim; ++z) {
    double pen = 0.0;
    for (const auto& c : inst.clauses) {
      int ones = 0;
      for (int v : c) ones += (z >> v) & 1u;
      pen += (ones - 1) * (ones - 1);
    }
    h[z * dim + z] = (1.0 - s) * 0.5 * n + s * pen;
    for (int i = 0; i < n; ++i) h[(z ^ (std::size_t{1} << i)) * dim + z] += -(1.0 - s) * 0.5;
  }
  return h;
}

// --- Gate-level modular arithmetic (Draper adder in Fourier space, modular
// addition and multiplication as laid out by Beauregard). Only for tests.

class DraperReference {
 public:
  DraperReference(const entrack::ShorLayout& layout, std::uint64_t N) : L_(layout), N_(N) {
    for (int k = 0; k <= L_.n; ++k) b_.push_back(L_.b(k));
  }

  /// Controlled (x, b) -> (x, b + m x mod N), or its inverse.
  void cmult(entrack::StateVector& s, std::uint64_t m, bool inverse) const {
    s.apply_qft(b_);
    if (!inverse) {
      for (int i = 0; i < L_.n; ++i) add_mod(s, (m << i) % N_, L_.x(i), false);
    } else {
      for (int i = L_.n - 1; i >= 0; --i) add_mod(s, (m << i) % N_, L_.x(i), true);
    }
    s.apply_qft(b_, true);
  }

 private:
  using Step = std::function<void(entrack::StateVector&, bool)>;

  // phi(b) -> phi(b + a) on the Fourier-space b register, optional controls.
  void phi_add(entrack::StateVector& s, double a, std::vector<int> controls, bool inverse) const {
    const double M = std::ldexp(1.0, L_.n + 1);
    for (int k = 0; k <= L_.n; ++k) {
      double theta = 2.0 * std::numbers::pi * a * std::ldexp(1.0, k) / M;
      if (inverse) theta = -theta;
      s.apply_controlled(controls, entrack::PhaseOp{b_[static_cast<std::size_t>(k)], theta});
    }
  }

  // Doubly-controlled modular adder on the Fourier-space b register; b < N.
  void add_mod(entrack::StateVector& s, std::uint64_t a, int xq, bool inverse) const {
    const int c = L_.control();
    const int anc = L_.overflow();
    const int msb = b_.back();
    const double A = static_cast<double>(a), Nd = static_cast<double>(N_);
    std::vector<Step> steps = {
        [=, this](auto& st, bool inv) { phi_add(st, A, {c, xq}, inv); },
        [=, this](auto& st, bool inv) { phi_add(st, Nd, {}, !inv); },
        [=, this](auto& st, bool inv) { st.apply_qft(b_, !inv); },
        [=](auto& st, bool) { st.apply_controlled({msb}, entrack::XOp{anc}); },
        [=, this](auto& st, bool inv) { st.apply_qft(b_, inv); },
        [=, this](auto& st, bool inv) { phi_add(st, Nd, {anc}, inv); },
        [=, this](auto& st, bool inv) { phi_add(st, A, {c, xq}, !inv); },
        [=, this](auto& st, bool inv) { st.apply_qft(b_, !inv); },
        [=](auto& st, bool) { st.apply_1q(msb, entrack::gates::pauli_x()); },
        [=](auto& st, bool) { st.apply_controlled({msb}, entrack::XOp{anc}); },
        [=](auto& st, bool) { st.apply_1q(msb, entrack::gates::pauli_x()); },
        [=, this](auto& st, bool inv) { st.apply_qft(b_, inv); },
        [=, this](auto& st, bool inv) { phi_add(st, A, {c, xq}, inv); },
    };
    if (!inverse)
      for (auto& step : steps) step(s, false);
    else
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) (*it)(s, true);
  }

  entrack::ShorLayout L_;
  std::uint64_t N_;
  std::vector<int> b_;
};

/// Omega(x) by trial division.
inline int count_prime_factors(std::uint64_t x) {
  int c = 0;
  for (std::uint64_t p = 2; p <= x; ++p)
    while (x % p == 0) x /= p, ++c;
  return c;
}

/// Multiplicative order of a mod N by direct iteration.
inline std::uint64_t brute_order(std::uint64_t a, std::uint64_t N) {
  std::uint64_t v = a % N, r = 1;
  while (v != 1) v = v * a % N, ++r;
  return r;
}

}  // namespace oracle
