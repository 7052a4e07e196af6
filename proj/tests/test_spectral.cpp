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
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "entrack/boundaries.hpp"
#include "entrack/error.hpp"
#include "entrack/scenarios.hpp"
#include "entrack/spectral.hpp"
#include "oracles.hpp"

using namespace entrack;
using std::numbers::ln2;

namespace {

Spectrum spec(std::vector<double> v) {
  const std::size_t n = v.size();
  return make_spectrum(std::move(v), n, n);
}

double direct_entropy(const std::vector<long double>& v) {
  long double e = 0;
  for (auto x : v) e -= x * std::log(x);
  return static_cast<double>(e);
}

StateVector bell() {
  const double h = 1 / std::numbers::sqrt2;
  return StateVector::from_amplitudes({h, 0, 0, h});
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("partial trace examples") {
    const auto rho = partial_trace(bell(), Bipartition::make(2, {0}));
    CHECK(std::abs(rho.data(0, 0) - cplx(0.5)) <= 1e-15);
    CHECK(std::abs(rho.data(1, 1) - cplx(0.5)) <= 1e-15);
    CHECK(std::abs(rho.data(0, 1)) <= 1e-15);
    const auto product = spectrum(partial_trace(StateVector::basis(2, 0b01), Bipartition::make(2, {0})));
    CHECK(product.lambda0() == doctest::Approx(1.0));
    CHECK(product.lambda1() == doctest::Approx(0.0));
    CHECK_THROWS_AS(partial_trace(bell(), Bipartition::make(3, {0})), InvalidInput);
  }

  TEST_CASE("prime state n=4 against an explicit Gram oracle") {
    // Primes below 16, uniform amplitudes, high two qubits versus low two.
    std::vector<cplx> amps(16);
    for (int p : {2, 3, 5, 7, 11, 13}) amps[p] = 1 / std::sqrt(6.0);
    const std::vector<int> high = {2, 3};
    const auto want = oracle::power_eigvals(oracle::dense_reduced(amps, 4, high));
    const auto got = spectrum(partial_trace(StateVector::from_amplitudes(amps), Bipartition::natural(4)));
    REQUIRE(got.values.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got.values[i] - want[i]) <= 1e-12);
  }

  TEST_CASE("Gram path equals the outer-product partial trace") {
    RngStream rng(6);
    std::mt19937_64 pick(6);
    for (int trial = 0; trial < 20; ++trial) {
      const auto psi = random_state(6, rng);
      std::vector<int> qs = {0, 1, 2, 3, 4, 5};
      std::shuffle(qs.begin(), qs.end(), pick);
      qs.resize(1 + trial % 3);
      const auto part = Bipartition::make(6, qs);
      const auto rho = partial_trace(psi, part);
      const auto dense = oracle::dense_reduced(psi.amplitudes(), 6, part.subsystem());
      for (std::size_t i = 0; i < rho.alpha; ++i)
        for (std::size_t j = 0; j < rho.alpha; ++j)
          CHECK(std::abs(rho.data(i, j) - dense[i][j]) <= 1e-12);
    }
  }

  TEST_CASE("spectrum examples") {
    const auto b = spectrum(partial_trace(bell(), Bipartition::make(2, {1})));
    CHECK(b.values[0] == doctest::Approx(0.5));
    CHECK(b.values[1] == doctest::Approx(0.5));
    const double h = 1 / std::numbers::sqrt2;
    std::vector<cplx> ghz(8);
    ghz[0] = ghz[7] = h;
    const auto g = spectrum(partial_trace(StateVector::from_amplitudes(ghz), Bipartition::make(3, {2})));
    CHECK(g.values[0] == doctest::Approx(0.5));
    CHECK(g.values[1] == doctest::Approx(0.5));
    CHECK(g.alpha == 2);
    CHECK(g.beta == 4);
    ReducedDensityMatrix bad{2, 2, ComplexMatrix::diagonal(std::vector<double>{0.9, 0.3})};
    CHECK_THROWS_AS(spectrum(bad), InvalidInput);
    ReducedDensityMatrix neg{2, 2, ComplexMatrix::diagonal(std::vector<double>{1.1, -0.1})};
    CHECK_THROWS_AS(spectrum(neg), DomainError);
  }

  TEST_CASE("entropies") {
    CHECK(von_neumann(spec({1.0})) == 0.0);
    CHECK(von_neumann(spec({0.5, 0.5})) == doctest::Approx(ln2).epsilon(1e-15));
    const double e = von_neumann(spec({0.4, 0.4, 0.2}));
    CHECK(std::abs(e - direct_entropy({0.4L, 0.4L, 0.2L})) <= 1e-14);
    CHECK(std::abs(e - 1.054920) <= 1e-6);
    CHECK(std::abs(renyi(spec({0.5, 0.5}), 2) - ln2) <= 1e-15);
    for (double d : {0.0, 0.5, 2.0, 7.5}) CHECK(renyi(spec({1.0, 0.0}), d) == 0.0);
    CHECK(std::abs(renyi(spec({0.4, 0.4, 0.2}), 2) + std::log(0.36)) <= 1e-14);
    CHECK(std::abs(renyi(spec({0.4, 0.4, 0.2}), 2) - 1.021651) <= 1e-6);
    CHECK(renyi(spec({0.5, 0.5, 0.0, 0.0}), 0) == doctest::Approx(ln2));
    CHECK_THROWS_AS(renyi(spec({0.5, 0.5}), 1.0), DomainError);
    CHECK_THROWS_AS(renyi(spec({0.5, 0.5}), -1.0), DomainError);
  }

  TEST_CASE("entanglement gap") {
    CHECK(ent_gap(spec({0.5, 0.5})) == 0.0);
    const double inf = ent_gap(spec({1.0, 0.0}));
    CHECK(std::isinf(inf));
    CHECK(gap_plot_value(inf, 16) == doctest::Approx(2 * std::log(16.0)));
    CHECK(gap_plot_value(0.3, 16) == 0.3);
    CHECK(std::abs(ent_gap(spec({0.75, 0.25})) - std::log(3.0)) <= 1e-15);
  }

  TEST_CASE("trajectory points") {
    const auto b = trajectory_point(bell(), Bipartition::make(2, {0}), "bell");
    CHECK(b.lambda0 == doctest::Approx(0.5));
    CHECK(b.entropy == doctest::Approx(ln2));
    CHECK(std::abs(b.gap) <= 1e-12);
    CHECK(b.renyi_at(2.0) == doctest::Approx(ln2));
    CHECK_THROWS_AS(b.renyi_at(9.0), InvalidInput);

    const auto top = trajectory_point(prime_state({6, PrimeKind::P, 5}), Bipartition::natural(6), "P5");
    CHECK(top.lambda0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(top.entropy <= 1e-9);
    const auto u = trajectory_point(StateVector::uniform(8), Bipartition::make(8, {1, 4, 6}), "u");
    CHECK(u.lambda0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(u.entropy <= 1e-9);
  }

  TEST_CASE("QFT comparison") {
    const auto [b0, a0] = qft_compare(StateVector::basis(6, 37), Bipartition::natural(6));
    CHECK(b0.lambda0 == doctest::Approx(1.0));
    CHECK(a0.lambda0 == doctest::Approx(1.0));
    CHECK(a0.entropy <= 1e-9);
    RngStream rng(128);
    const auto psi = random_state(14, rng);
    const std::vector<cplx> before(psi.amplitudes().begin(), psi.amplitudes().end());
    const auto [b, a] = qft_compare(psi, Bipartition::natural(14));
    CHECK(std::abs(b.lambda0 - a.lambda0) <= 0.02);
    CHECK(std::abs(b.entropy - a.entropy) <= 0.05);
    CHECK(std::equal(before.begin(), before.end(), psi.amplitudes().begin()));
  }

  TEST_CASE("random states: trace, PSD and tight containment") {
    RngStream rng(42);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + trial % 9;
      const auto psi = random_state(n, rng, trial % 2 ? cplx(0.3, 0.1) : cplx{});
      std::vector<int> sub;
      for (int q = 0; q < n; q += 2) sub.push_back(q);
      const auto part = Bipartition::make(n, sub);
      const auto rho = partial_trace(psi, part);
      CHECK(std::abs(rho.data.trace() - cplx(1.0)) <= 1e-9);
      CHECK(rho.data.max_asymmetry() <= 1e-10);
      const auto s = spectrum(rho);
      CHECK(std::abs(s.sum() - 1.0) <= 1e-9);
      for (double v : s.values) CHECK(v >= 0.0);
      const auto p = point_from_spectrum(s, "r");
      CHECK(tight_contained(p));
      CHECK(p.lambda0 >= 1.0 / double(p.alpha) - 1e-9);
      CHECK(p.entropy <= std::log(double(p.alpha)) + 1e-9);
    }
  }

  TEST_CASE("Schmidt symmetry") {
    RngStream rng(7);
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = random_state(8, rng);
      const auto a = spectrum(partial_trace(psi, Bipartition::make(8, {0, 2, 5, 7})));
      const auto b = spectrum(partial_trace(psi, Bipartition::make(8, {1, 3, 4, 6})));
      for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-10);

      const auto part = Bipartition::make(8, {0, 3});
      const auto m = coefficient_matrix(psi, part);
      ComplexMatrix mt(m.cols(), m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mt(j, i) = std::conj(m(i, j));
      const auto small = eigvalsh(m.gram());
      const auto large = eigvalsh(mt.gram());
      for (std::size_t i = 0; i < large.size(); ++i)
        CHECK(std::abs(large[i] - (i < small.size() ? small[i] : 0.0)) <= 1e-10);
    }
  }

  TEST_CASE("min-entropy is the large-degree Renyi limit") {
    // Holds within 0.01 nats once lambda0 >= 0.55; the residual is
    // about -ln(lambda0) / 63 at degree 64.
    std::mt19937_64 gen(64);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
      const double l0 = 0.55 + 0.44 * u(gen);
      std::vector<double> rest(1 + trial % 63);
      double sum = 0.0;
      for (auto& r : rest) sum += (r = u(gen) + 1e-3);
      std::vector<double> v = {l0};
      for (double r : rest) v.push_back(r / sum * (1 - l0));
      const auto s = spec(v);
      if (s.lambda0() / s.lambda1() < 1.1) continue;
      CHECK(std::abs(min_entropy(s) - renyi(s, 64)) <= 0.01);
    }
  }
}
