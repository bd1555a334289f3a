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

#include "qsdc/qcore/gates.h"

#include <numbers>
#include <stdexcept>

namespace qsdc::qcore {

Eigen::Matrix2cd pauli_matrix(PauliOp op) {
  Eigen::Matrix2cd m;
  switch (op) {
    case PauliOp::kI:
      m << 1, 0, 0, 1;
      break;
    case PauliOp::kX:
      m << 0, 1, 1, 0;
      break;
    case PauliOp::kY:
      // |0><1| - |1><0|
      m << 0, 1, -1, 0;
      break;
    case PauliOp::kZ:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::Matrix4cd controlled_matrix(ControlledOp op) {
  const Eigen::Matrix2cd id = pauli_matrix(PauliOp::kI);
  const Eigen::Matrix2cd x = pauli_matrix(PauliOp::kX);
  Eigen::Matrix2cd keep;
  Eigen::Matrix2cd flip;
  if (op == ControlledOp::kC0) {
    keep << 1, 0, 0, 0;
    flip << 0, 0, 0, 1;
  } else {
    keep << 0.5, 0.5, 0.5, 0.5;
    flip << 0.5, -0.5, -0.5, 0.5;
  }
  return kron(keep, id) + kron(flip, x);
}

void apply_single(StateRegister& reg, QubitId q, const Eigen::Matrix2cd& m) {
  const std::uint64_t mask = std::uint64_t{1} << reg.bit_position(q);
  auto& amps = RegisterAccess::amps(reg);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & mask) continue;
    const Complex a0 = amps[idx];
    const Complex a1 = amps[idx | mask];
    amps[idx] = m(0, 0) * a0 + m(0, 1) * a1;
    amps[idx | mask] = m(1, 0) * a0 + m(1, 1) * a1;
  }
}

void apply_pauli(StateRegister& reg, QubitId q, PauliOp op) {
  if (op == PauliOp::kI) {
    reg.slot(q);  // still validates the id
    return;
  }
  apply_single(reg, q, pauli_matrix(op));
}

void apply_two(StateRegister& reg, QubitId first, QubitId second, const Eigen::Matrix4cd& m) {
  if (first.index == second.index) throw std::invalid_argument("apply_two: same qubit twice");
  const std::uint64_t hi = std::uint64_t{1} << reg.bit_position(first);
  const std::uint64_t lo = std::uint64_t{1} << reg.bit_position(second);
  auto& amps = RegisterAccess::amps(reg);
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & (hi | lo)) continue;
    const std::uint64_t at[4] = {idx, idx | lo, idx | hi, idx | hi | lo};
    Complex in[4];
    for (int k = 0; k < 4; ++k) in[k] = amps[at[k]];
    for (int r = 0; r < 4; ++r) {
      Complex s{};
      for (int c = 0; c < 4; ++c) s += m(r, c) * in[c];
      amps[at[r]] = s;
    }
  }
}

void apply_controlled(StateRegister& reg, QubitId control, QubitId target, ControlledOp op) {
  if (control.index == target.index) {
    throw std::invalid_argument("apply_controlled: control and target are the same qubit");
  }
  apply_two(reg, control, target, controlled_matrix(op));
}

void apply_hadamard(StateRegister& reg, QubitId q) {
  const double h = std::numbers::sqrt2 / 2.0;
  Eigen::Matrix2cd m;
  m << h, h, h, -h;
  apply_single(reg, q, m);
}

}  // namespace qsdc::qcore
