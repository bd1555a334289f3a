// Copyright 2026 The QSDC Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsdc/qcore/types.h"

namespace qsdc::qcore {

/// Pure state over an ordered list of labeled qubits.
///
/// Amplitude index bit layout is big-endian: the first qubit in `qubits()`
/// is the most significant bit of the index. A register with no qubits
/// holds the scalar 1.
///
/// Registers are plain values with a single owner; nothing here is
/// synchronized.
class StateRegister {
 public:
  StateRegister() : amps_{Complex{1.0, 0.0}} {}

  /// Validates distinct ids, 2^n amplitudes and unit norm.
  StateRegister(std::vector<QubitId> qubits, std::vector<Complex> amplitudes);

  /// |index> over `qubits`.
  static StateRegister computational(std::vector<QubitId> qubits, std::uint64_t index);

  /// a0|0> + a1|1>, normalized by the caller.
  static StateRegister single(QubitId q, Complex a0, Complex a1);

  std::span<const QubitId> qubits() const { return qubits_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::size_t num_qubits() const { return qubits_.size(); }
  std::size_t dimension() const { return amps_.size(); }

  bool contains(QubitId q) const;
  /// Position of `q` in qubits(). Throws std::out_of_range for unknown ids.
  std::size_t slot(QubitId q) const;
  /// Bit of the amplitude index that encodes `q`.
  int bit_position(QubitId q) const {
    return static_cast<int>(qubits_.size() - 1 - slot(q));
  }

  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }
  double norm() const;

  /// Hard cap on register width; 24 unless changed.
  static std::size_t max_qubits();
  static void set_max_qubits(std::size_t n);

 private:
  friend class RegisterAccess;

  std::vector<QubitId> qubits_;
  std::vector<Complex> amps_;
};

/// Mutable access for the gate and measurement kernels in this module.
class RegisterAccess {
 public:
  static std::vector<Complex>& amps(StateRegister& r) { return r.amps_; }
  static std::vector<QubitId>& qubits(StateRegister& r) { return r.qubits_; }
};

/// (|00> + |11>)/sqrt(2) and the other three Bell states over (a, b).
StateRegister make_bell(QubitId a, QubitId b, BellOutcome which = BellOutcome::kPhiPlus);

/// (|0...0> + |1...1>)/sqrt(2). Requires at least two qubits.
StateRegister make_ghz(std::span<const QubitId> ids);

/// (|x> + s|~x>)/sqrt(2) for a GHZ-basis outcome over `ids`.
StateRegister make_ghz_basis_state(std::span<const QubitId> ids, const GhzOutcome& which);

/// Tensor product a (x) b; qubit order is a's followed by b's.
StateRegister compose(const StateRegister& a, const StateRegister& b);

/// Same state with qubits listed in `order` (a permutation of reg.qubits()).
StateRegister permute(const StateRegister& reg, std::span<const QubitId> order);

/// Removes `q`, which must be unentangled with the rest (purity 1 within
/// tolerance). Throws std::invalid_argument otherwise.
StateRegister drop_qubit(const StateRegister& reg, QubitId q);

/// |<a|b>|^2 after aligning b's qubit order to a's. The qubit sets must match.
double fidelity(const StateRegister& a, const StateRegister& b);

/// Elementwise equality up to one global phase.
bool equal_up_to_phase(const StateRegister& a, const StateRegister& b,
                       double tol = kTolerance);

}  // namespace qsdc::qcore
