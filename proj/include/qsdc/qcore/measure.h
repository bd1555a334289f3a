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

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qsdc/qcore/rng.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::qcore {

/// Sparse k-qubit vector; each term is (local basis index, coefficient),
/// local index big-endian over the measured qubits.
struct BasisVector {
  std::vector<std::pair<std::uint32_t, Complex>> terms;
};

/// Orthonormal measurement basis on k qubits. Outcome k is vectors()[k].
class MeasurementBasis {
 public:
  MeasurementBasis(int num_qubits, std::vector<BasisVector> vectors);

  /// {|0>, |1>}.
  static MeasurementBasis z();
  /// {|+>, |->}.
  static MeasurementBasis x();
  /// Phi+, Phi-, psi+, psi- in BellOutcome order.
  static MeasurementBasis bell();
  /// GHZ basis on k >= 2 qubits; outcome index = 2 * pattern + (minus ? 1 : 0).
  static MeasurementBasis ghz(int k);
  /// Basis given by the columns of a unitary.
  static MeasurementBasis dense(const Eigen::MatrixXcd& columns);
  /// a on the leading qubits, b on the trailing ones; outcome = ia * |b| + ib.
  static MeasurementBasis product(const MeasurementBasis& a, const MeasurementBasis& b);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<BasisVector>& vectors() const { return vectors_; }

 private:
  int num_qubits_;
  std::vector<BasisVector> vectors_;
};

GhzOutcome ghz_outcome_from_index(int num_qubits, std::size_t index);
std::size_t ghz_index(const GhzOutcome& g);

/// Born-rule probabilities of every outcome; no collapse.
std::vector<double> outcome_probabilities(const StateRegister& reg, std::span<const QubitId> qs,
                                          const MeasurementBasis& basis);

/// Samples an outcome, collapses onto it and renormalizes. Measured qubits
/// stay in the register in the post-measurement basis state.
std::size_t measure(StateRegister& reg, std::span<const QubitId> qs,
                    const MeasurementBasis& basis, Rng& rng);

int measure_z(StateRegister& reg, QubitId q, Rng& rng);
XOutcome measure_x(StateRegister& reg, QubitId q, Rng& rng);
BellOutcome measure_bell(StateRegister& reg, QubitId q1, QubitId q2, Rng& rng);
/// Requires at least two qubits; the first listed qubit is the pattern's
/// leading (always 0) position.
GhzOutcome measure_ghz(StateRegister& reg, std::span<const QubitId> qs, Rng& rng);

}  // namespace qsdc::qcore
