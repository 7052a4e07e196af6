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
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "entrack/numerics.hpp"
#include "entrack/rng.hpp"

namespace entrack {

inline constexpr int kDefaultMaxQubits = 24;

/// 2x2 gate, row-major: {m00, m01, m10, m11}.
using Gate2 = std::array<cplx, 4>;

namespace gates {
Gate2 identity();
Gate2 hadamard();
Gate2 pauli_x();
Gate2 pauli_z();
/// diag(1, e^{i theta})
Gate2 phase(double theta);
}  // namespace gates

struct XOp {
  int target;
};
struct SwapOp {
  int first;
  int second;
};
/// diag(1, e^{i theta}) on `target`.
struct PhaseOp {
  int target;
  double theta;
};
struct UnitaryOp {
  int target;
  Gate2 gate;
};
using ControlledTarget = std::variant<XOp, SwapOp, PhaseOp, UnitaryOp>;

struct MeasurementRecord {
  int qubit;
  int outcome;
  double probability;
};

/// Dense n-qubit pure state. Qubit 0 is the least significant bit of the basis
/// index. Mutating operations work in place and keep the norm.
class StateVector {
 public:
  static StateVector basis(int n, std::uint64_t index, int max_qubits = kDefaultMaxQubits);
  static StateVector uniform(int n, int max_qubits = kDefaultMaxQubits);
  /// Takes ownership of `amps`; size must be a power of two and the norm must
  /// be 1 within `tol`.
  static StateVector from_amplitudes(std::vector<cplx> amps, double tol = 1e-9,
                                     int max_qubits = kDefaultMaxQubits);

  int num_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

  void apply_1q(int target, const Gate2& gate);
  void apply_controlled(std::span<const int> controls, const ControlledTarget& op);
  void apply_controlled(std::initializer_list<int> controls, const ControlledTarget& op) {
    apply_controlled(std::span<const int>(controls.begin(), controls.size()), op);
  }
  /// Exact QFT on the sub-register (qubits[0] = least significant), including
  /// the final bit reversal.
  void apply_qft(std::span<const int> qubits, bool inverse = false);
  /// QFT on the whole register.
  void apply_qft(bool inverse = false);

  /// Classical reversible block: |i> -> |perm(i)>. `perm` must be a bijection
  /// on [0, 2^n); this is checked.
  void apply_permutation(const std::function<std::uint64_t(std::uint64_t)>& perm);

  double probability_one(int target) const;
  /// Born-rule measurement; collapses and renormalises. The outcome is
  /// appended to the transcript.
  int measure(int target, RngStream& rng);
  /// Measure then flip to |0>.
  int measure_and_reset(int target, RngStream& rng);

  const std::vector<MeasurementRecord>& transcript() const noexcept { return transcript_; }

 private:
  StateVector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}
  void check_qubit(int q, const char* where) const;

  int n_ = 0;
  std::vector<cplx> amps_;
  std::vector<MeasurementRecord> transcript_;
};

/// Split of the register into a subsystem A and its complement. The smaller
/// side is always A (alpha <= beta); when the requested subsystem is the larger
/// side the roles are swapped and swapped() reports it.
class Bipartition {
 public:
  static Bipartition make(int n, std::vector<int> subsystem);
  /// High n/2 qubits versus low n/2 (n even).
  static Bipartition natural(int n);

  int num_qubits() const noexcept { return n_; }
  const std::vector<int>& subsystem() const noexcept { return subsystem_; }
  const std::vector<int>& complement() const noexcept { return complement_; }
  std::size_t alpha() const noexcept { return std::size_t{1} << subsystem_.size(); }
  std::size_t beta() const noexcept { return std::size_t{1} << complement_.size(); }
  bool swapped() const noexcept { return swapped_; }

 private:
  int n_ = 0;
  std::vector<int> subsystem_;
  std::vector<int> complement_;
  bool swapped_ = false;
};

/// Haar-like or decentralised random state on n qubits: amplitudes i.i.d.
/// complex normal with mean `mean` and unit variance, then normalised.
StateVector random_state(int n, RngStream& rng, cplx mean = 0.0);

}  // namespace entrack
