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
#include "entrack/error.hpp"
#include "entrack/statevector.hpp"
#include "oracles.hpp"

using namespace entrack;

namespace {

double distance(std::span<const cplx> a, std::span<const cplx> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_SUITE("statevector") {
  TEST_CASE("basis and uniform states") {
    const auto s = StateVector::basis(2, 0);
    CHECK(s[0] == cplx(1.0));
    const auto x = StateVector::basis(4, 1);
    CHECK(x[1] == cplx(1.0));
    CHECK(x.num_qubits() == 4);
    CHECK_THROWS_AS(StateVector::basis(1, 2), DomainError);
    const auto u1 = StateVector::uniform(1);
    CHECK(u1[0].real() == doctest::Approx(1 / std::numbers::sqrt2));
    CHECK(u1[1].real() == doctest::Approx(1 / std::numbers::sqrt2));
    const auto u2 = StateVector::uniform(2);
    for (auto a : u2.amplitudes()) CHECK(a.real() == doctest::Approx(0.5));
    CHECK(std::abs(StateVector::uniform(10).norm() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(StateVector::uniform(25), DomainError);
  }

  TEST_CASE("single-qubit gates") {
    auto s = StateVector::basis(1, 0);
    s.apply_1q(0, gates::hadamard());
    CHECK(s[0].real() == doctest::Approx(1 / std::numbers::sqrt2));
    CHECK(s[1].real() == doctest::Approx(1 / std::numbers::sqrt2));
    auto t = StateVector::basis(1, 0);
    t.apply_1q(0, gates::pauli_x());
    CHECK(t[1] == cplx(1.0));
    CHECK_THROWS_AS(t.apply_1q(0, Gate2{1.0, 0.0, 0.0, 2.0}), InvalidInput);

    RngStream rng(3);
    auto r = random_state(6, rng);
    const std::vector<cplx> before(r.amplitudes().begin(), r.amplitudes().end());
    r.apply_1q(4, gates::hadamard());
    r.apply_1q(4, gates::hadamard());
    CHECK(distance(r.amplitudes(), before) <= 1e-12);
  }

  TEST_CASE("controlled operations") {
    auto cnot = StateVector::basis(2, 0b10);
    cnot.apply_controlled({1}, XOp{0});
    CHECK(cnot[0b11] == cplx(1.0));
    auto toffoli = StateVector::basis(3, 0b110);
    toffoli.apply_controlled({1, 2}, XOp{0});
    CHECK(toffoli[0b111] == cplx(1.0));
    auto cswap = StateVector::basis(3, 0b001);
    cswap.apply_controlled({2}, SwapOp{0, 1});
    CHECK(cswap[0b001] == cplx(1.0));
    auto active = StateVector::basis(3, 0b101);
    active.apply_controlled({2}, SwapOp{0, 1});
    CHECK(active[0b110] == cplx(1.0));
    CHECK_THROWS_AS(active.apply_controlled({0}, XOp{0}), InvalidInput);
    CHECK_THROWS_AS(active.apply_controlled({1, 1}, XOp{0}), InvalidInput);
    CHECK_THROWS_AS(active.apply_controlled({0}, SwapOp{0, 1}), InvalidInput);
  }

  TEST_CASE("empty control list equals direct application") {
    RngStream rng(5);
    const auto base = random_state(5, rng);
    auto a = base, b = base;
    a.apply_controlled({}, UnitaryOp{2, gates::hadamard()});
    b.apply_1q(2, gates::hadamard());
    CHECK(distance(a.amplitudes(), b.amplitudes()) <= 1e-15);
    a.apply_controlled({}, XOp{1});
    b.apply_1q(1, gates::pauli_x());
    CHECK(distance(a.amplitudes(), b.amplitudes()) <= 1e-15);
    a.apply_controlled({}, PhaseOp{3, 0.3});
    b.apply_1q(3, gates::phase(0.3));
    CHECK(distance(a.amplitudes(), b.amplitudes()) <= 1e-15);
    a.apply_controlled({}, SwapOp{0, 4});
    b.apply_permutation([](std::uint64_t i) {
      const std::uint64_t b0 = i & 1u, b4 = (i >> 4) & 1u;
      return (i & ~std::uint64_t{0b10001}) | (b0 << 4) | b4;
    });
    CHECK(distance(a.amplitudes(), b.amplitudes()) <= 1e-15);
  }

  TEST_CASE("QFT examples") {
    auto one = StateVector::basis(1, 0);
    one.apply_qft();
    CHECK(one[0].real() == doctest::Approx(1 / std::numbers::sqrt2));
    CHECK(one[1].real() == doctest::Approx(1 / std::numbers::sqrt2));
    auto two = StateVector::basis(2, 0);
    two.apply_qft();
    for (auto a : two.amplitudes()) CHECK(std::abs(a - cplx(0.5)) <= 1e-15);

    RngStream rng(8);
    auto r = random_state(8, rng);
    const std::vector<cplx> before(r.amplitudes().begin(), r.amplitudes().end());
    r.apply_qft();
    r.apply_qft(true);
    CHECK(distance(r.amplitudes(), before) <= 1e-10);
    const std::vector<int> dup = {0, 0};
    CHECK_THROWS_AS(r.apply_qft(dup), InvalidInput);
  }

  TEST_CASE("QFT matrix equals the DFT matrix for n <= 4") {
    for (int n = 1; n <= 4; ++n) {
      const std::size_t dim = std::size_t{1} << n;
      for (std::size_t col = 0; col < dim; ++col) {
        auto s = StateVector::basis(n, col);
        s.apply_qft();
        for (std::size_t row = 0; row < dim; ++row) {
          const cplx want = std::polar(1.0 / std::sqrt(double(dim)),
                                       2 * std::numbers::pi * double(row * col % dim) / double(dim));
          CHECK(std::abs(s[row] - want) <= 1e-12);
        }
      }
    }
  }

  TEST_CASE("QFT on a sub-register matches the dense DFT on that register") {
    RngStream rng(21);
    const auto base = random_state(3, rng);
    // Embed a 3-qubit state on qubits {1, 3, 4} of 5 with the rest in |0>.
    const std::vector<int> qs = {1, 3, 4};
    std::vector<cplx> emb(32);
    for (std::size_t k = 0; k < 8; ++k) {
      std::size_t i = 0;
      for (std::size_t j = 0; j < 3; ++j) i |= ((k >> j) & 1u) << qs[j];
      emb[i] = base[k];
    }
    auto s = StateVector::from_amplitudes(emb);
    s.apply_qft(qs);
    const auto want = oracle::dft(base.amplitudes());
    for (std::size_t k = 0; k < 8; ++k) {
      std::size_t i = 0;
      for (std::size_t j = 0; j < 3; ++j) i |= ((k >> j) & 1u) << qs[j];
      CHECK(std::abs(s[i] - want[k]) <= 1e-12);
    }
  }

  TEST_CASE("norm is preserved across 10^4 gates") {
    RngStream rng(10);
    auto s = random_state(10, rng);
    std::mt19937_64 pick(99);
    for (int g = 0; g < 10000; ++g) {
      const int q = int(pick() % 10);
      const int c = int((q + 1 + pick() % 9) % 10);
      switch (pick() % 5) {
        case 0: s.apply_1q(q, gates::hadamard()); break;
        case 1: s.apply_controlled({c}, XOp{q}); break;
        case 2: s.apply_controlled({c}, PhaseOp{q, 0.001 * double(g)}); break;
        case 3: {
          int t = 0;
          while (t == q || t == c) ++t;
          s.apply_controlled({t}, SwapOp{q, c});
          break;
        }
        default: s.apply_1q(q, gates::phase(0.7)); break;
      }
    }
    CHECK(std::abs(s.norm() - 1.0) <= 1e-9);
  }

  TEST_CASE("measurement") {
    RngStream rng(1);
    auto one = StateVector::basis(1, 1);
    CHECK(one.measure(0, rng) == 1);
    CHECK(one.transcript().size() == 1);
    CHECK(one.transcript()[0].probability == doctest::Approx(1.0));

    auto bell = StateVector::from_amplitudes({1 / std::numbers::sqrt2, 0, 0, 1 / std::numbers::sqrt2});
    auto collapsed = bell;
    RngStream r2(0);
    int outcome = collapsed.measure(0, r2);
    CHECK(std::abs(collapsed[outcome ? 3 : 0]) == doctest::Approx(1.0));

    auto run = [](std::uint64_t seed) {
      RngStream r(seed);
      std::vector<int> bits;
      for (int k = 0; k < 32; ++k) {
        auto s = StateVector::basis(1, 0);
        s.apply_1q(0, gates::hadamard());
        bits.push_back(s.measure(0, r));
      }
      return bits;
    };
    CHECK(run(77) == run(77));
    CHECK(run(77) != run(78));

    auto reset = StateVector::basis(2, 0b10);
    CHECK(reset.measure_and_reset(1, rng) == 1);
    CHECK(reset[0] == cplx(1.0));
  }

  TEST_CASE("permutation fast path") {
    auto s = StateVector::uniform(3);
    s.apply_permutation([](std::uint64_t i) { return (i + 1) % 8; });
    CHECK(std::abs(s.norm() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(s.apply_permutation([](std::uint64_t) { return std::uint64_t{0}; }), InvalidInput);
  }

  TEST_CASE("bipartition keeps the smaller side as A") {
    const auto p = Bipartition::make(5, {0, 1, 2});
    CHECK(p.swapped());
    CHECK(p.alpha() == 4);
    CHECK(p.beta() == 8);
    const auto nat = Bipartition::natural(4);
    CHECK((nat.subsystem() == std::vector<int>{2, 3}));
    CHECK_THROWS_AS(Bipartition::make(3, {0, 0}), InvalidInput);
    CHECK_THROWS_AS(Bipartition::make(3, {3}), InvalidInput);
    CHECK_THROWS_AS(Bipartition::natural(3), DomainError);
  }
}
