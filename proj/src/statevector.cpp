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

#include "entrack/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "entrack/error.hpp"

namespace entrack {

namespace gates {
Gate2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
Gate2 hadamard() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {h, h, h, -h};
}
Gate2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Gate2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
Gate2 phase(double theta) { return {1.0, 0.0, 0.0, std::polar(1.0, theta)}; }
}  // namespace gates

namespace {

void check_size(int n, int max_qubits) {
  if (n < 0 || n > max_qubits) {
    std::ostringstream os;
    os << "qubit count " << n << " outside [0, " << max_qubits << "]";
    throw DomainError(os.str());
  }
}

void check_unitary(const Gate2& g) {
  // G^dagger G = I
  const cplx a = std::conj(g[0]) * g[0] + std::conj(g[2]) * g[2];
  const cplx b = std::conj(g[0]) * g[1] + std::conj(g[2]) * g[3];
  const cplx d = std::conj(g[1]) * g[1] + std::conj(g[3]) * g[3];
  const double dev = std::max({std::abs(a - 1.0), std::abs(b), std::abs(d - 1.0)});
  if (dev > 1e-12) {
    std::ostringstream os;
    os << "gate is not unitary (deviation " << dev << ")";
    throw InvalidInput(os.str());
  }
}

// Inserts a zero bit at position `bit` of k.
inline std::uint64_t insert_zero(std::uint64_t k, int bit) {
  const std::uint64_t low = k & ((std::uint64_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace

StateVector StateVector::basis(int n, std::uint64_t index, int max_qubits) {
  check_size(n, max_qubits);
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (index >= dim) {
    std::ostringstream os;
    os << "basis index " << index << " out of range for " << n << " qubits";
    throw DomainError(os.str());
  }
  std::vector<cplx> amps(dim);
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::uniform(int n, int max_qubits) {
  if (n < 1) throw DomainError("uniform state needs at least one qubit");
  check_size(n, max_qubits);
  const std::size_t dim = std::size_t{1} << n;
  return StateVector(n, std::vector<cplx>(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)))));
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amps, double tol, int max_qubits) {
  if (amps.empty() || !std::has_single_bit(amps.size()))
    throw InvalidInput("amplitude count must be a power of two");
  const int n = std::countr_zero(amps.size());
  check_size(n, max_qubits);
  double s = 0.0;
  for (const auto& z : amps) s += std::norm(z);
  if (std::abs(s - 1.0) > tol) {
    std::ostringstream os;
    os << "state norm^2 " << s << " differs from 1 by more than " << tol;
    throw InvalidInput(os.str());
  }
  return StateVector(n, std::move(amps));
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return std::sqrt(s);
}

void StateVector::check_qubit(int q, const char* where) const {
  if (q < 0 || q >= n_) {
    std::ostringstream os;
    os << where << ": qubit " << q << " outside register of " << n_ << " qubits";
    throw DomainError(os.str());
  }
}

void StateVector::apply_1q(int target, const Gate2& gate) {
  check_qubit(target, "apply_1q");
  check_unitary(gate);
  const std::uint64_t half = amps_.size() / 2;
  const std::uint64_t stride = std::uint64_t{1} << target;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = insert_zero(k, target);
    const std::uint64_t i1 = i0 | stride;
    const cplx a0 = amps_[i0];
    const cplx a1 = amps_[i1];
    amps_[i0] = gate[0] * a0 + gate[1] * a1;
    amps_[i1] = gate[2] * a0 + gate[3] * a1;
  }
}

void StateVector::apply_controlled(std::span<const int> controls, const ControlledTarget& op) {
  std::uint64_t cmask = 0;
  for (int c : controls) {
    check_qubit(c, "apply_controlled");
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (cmask & bit) throw InvalidInput("apply_controlled: duplicate control qubit");
    cmask |= bit;
  }
  auto require_free = [&](int q) {
    check_qubit(q, "apply_controlled");
    if (cmask & (std::uint64_t{1} << q))
      throw InvalidInput("apply_controlled: target overlaps a control qubit");
  };
  const std::uint64_t dim = amps_.size();

  auto apply_gate = [&](int target, const Gate2& g) {
    require_free(target);
    const std::uint64_t stride = std::uint64_t{1} << target;
    for (std::uint64_t k = 0; k < dim / 2; ++k) {
      const std::uint64_t i0 = insert_zero(k, target);
      if ((i0 & cmask) != cmask) continue;
      const std::uint64_t i1 = i0 | stride;
      const cplx a0 = amps_[i0];
      const cplx a1 = amps_[i1];
      amps_[i0] = g[0] * a0 + g[1] * a1;
      amps_[i1] = g[2] * a0 + g[3] * a1;
    }
  };

  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, XOp>) {
          require_free(o.target);
          const std::uint64_t stride = std::uint64_t{1} << o.target;
          for (std::uint64_t k = 0; k < dim / 2; ++k) {
            const std::uint64_t i0 = insert_zero(k, o.target);
            if ((i0 & cmask) == cmask) std::swap(amps_[i0], amps_[i0 | stride]);
          }
        } else if constexpr (std::is_same_v<T, PhaseOp>) {
          require_free(o.target);
          const cplx ph = std::polar(1.0, o.theta);
          const std::uint64_t mask = cmask | (std::uint64_t{1} << o.target);
          for (std::uint64_t i = 0; i < dim; ++i)
            if ((i & mask) == mask) amps_[i] *= ph;
        } else if constexpr (std::is_same_v<T, SwapOp>) {
          require_free(o.first);
          require_free(o.second);
          if (o.first == o.second) throw InvalidInput("apply_controlled: SWAP of a qubit with itself");
          const std::uint64_t b1 = std::uint64_t{1} << o.first;
          const std::uint64_t b2 = std::uint64_t{1} << o.second;
          for (std::uint64_t i = 0; i < dim; ++i) {
            // Visit each (01, 10) pair once, from the side with first=1, second=0.
            if ((i & cmask) != cmask) continue;
            if ((i & b1) && !(i & b2)) std::swap(amps_[i], amps_[(i & ~b1) | b2]);
          }
        } else {
          check_unitary(o.gate);
          apply_gate(o.target, o.gate);
        }
      },
      op);
}

void StateVector::apply_qft(std::span<const int> qubits, bool inverse) {
  std::uint64_t seen = 0;
  for (int q : qubits) {
    check_qubit(q, "apply_qft");
    if (seen & (std::uint64_t{1} << q)) throw InvalidInput("apply_qft: duplicate qubit");
    seen |= std::uint64_t{1} << q;
  }
  const int k = static_cast<int>(qubits.size());
  const double sign = inverse ? -1.0 : 1.0;
  auto swaps = [&] {
    for (int i = 0; i < k / 2; ++i) apply_controlled({}, SwapOp{qubits[i], qubits[k - 1 - i]});
  };
  if (!inverse) {
    for (int i = k - 1; i >= 0; --i) {
      apply_1q(qubits[i], gates::hadamard());
      for (int j = i - 1; j >= 0; --j) {
        const double theta = sign * std::numbers::pi / static_cast<double>(std::uint64_t{1} << (i - j));
        apply_controlled({qubits[j]}, PhaseOp{qubits[i], theta});
      }
    }
    swaps();
  } else {
    swaps();
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < i; ++j) {
        const double theta = sign * std::numbers::pi / static_cast<double>(std::uint64_t{1} << (i - j));
        apply_controlled({qubits[j]}, PhaseOp{qubits[i], theta});
      }
      apply_1q(qubits[i], gates::hadamard());
    }
  }
}

void StateVector::apply_qft(bool inverse) {
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  apply_qft(all, inverse);
}

void StateVector::apply_permutation(const std::function<std::uint64_t(std::uint64_t)>& perm) {
  const std::uint64_t dim = amps_.size();
  std::vector<cplx> out(dim);
  std::vector<bool> hit(dim, false);
  for (std::uint64_t i = 0; i < dim; ++i) {
    const std::uint64_t j = perm(i);
    if (j >= dim || hit[j]) throw InvalidInput("apply_permutation: map is not a bijection");
    hit[j] = true;
    out[j] = amps_[i];
  }
  amps_ = std::move(out);
}

double StateVector::probability_one(int target) const {
  check_qubit(target, "probability_one");
  const std::uint64_t bit = std::uint64_t{1} << target;
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (i & bit) p += std::norm(amps_[i]);
  return p;
}

int StateVector::measure(int target, RngStream& rng) {
  const double p1 = probability_one(target);
  const int outcome = rng.uniform() < p1 ? 1 : 0;
  const double p = outcome ? p1 : 1.0 - p1;
  if (p < 1e-12) {
    std::ostringstream os;
    os << "measure: impossible branch (qubit " << target << ", outcome " << outcome
       << ", probability " << p << ")";
    throw DomainError(os.str());
  }
  const std::uint64_t bit = std::uint64_t{1} << target;
  const double scale = 1.0 / std::sqrt(p);
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const bool one = (i & bit) != 0;
    amps_[i] = (one == (outcome == 1)) ? amps_[i] * scale : cplx(0.0);
  }
  transcript_.push_back({target, outcome, p});
  return outcome;
}

int StateVector::measure_and_reset(int target, RngStream& rng) {
  const int outcome = measure(target, rng);
  if (outcome) apply_1q(target, gates::pauli_x());
  return outcome;
}

Bipartition Bipartition::make(int n, std::vector<int> subsystem) {
  if (n < 1) throw DomainError("bipartition of an empty register");
  std::vector<bool> in(n, false);
  for (int q : subsystem) {
    if (q < 0 || q >= n) throw InvalidInput("bipartition: qubit index outside register");
    if (in[q]) throw InvalidInput("bipartition: duplicate qubit in subsystem");
    in[q] = true;
  }
  std::vector<int> complement;
  for (int q = 0; q < n; ++q)
    if (!in[q]) complement.push_back(q);

  Bipartition p;
  p.n_ = n;
  if (subsystem.size() > complement.size()) {
    p.subsystem_ = std::move(complement);
    p.complement_ = std::move(subsystem);
    std::sort(p.complement_.begin(), p.complement_.end());
    p.swapped_ = true;
  } else {
    p.subsystem_ = std::move(subsystem);
    p.complement_ = std::move(complement);
  }
  return p;
}

Bipartition Bipartition::natural(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("natural bipartition needs an even qubit count");
  std::vector<int> high;
  for (int q = n / 2; q < n; ++q) high.push_back(q);
  return make(n, std::move(high));
}

StateVector random_state(int n, RngStream& rng, cplx mean) {
  check_size(n, kDefaultMaxQubits);
  std::vector<cplx> amps(std::size_t{1} << n);
  double s = 0.0;
  for (auto& z : amps) {
    z = rng.complex_normal(mean, 1.0);
    s += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(s);
  for (auto& z : amps) z *= scale;
  return StateVector::from_amplitudes(std::move(amps));
}

}  // namespace entrack
