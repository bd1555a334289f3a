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

#include "qsdc/qcore/state_register.h"

namespace qsdc::qcore {

Eigen::Matrix2cd pauli_matrix(PauliOp op);

/// 4x4 matrix in the |control target> basis, control as the high bit.
Eigen::Matrix4cd controlled_matrix(ControlledOp op);

/// Applies `op` to qubit q. Throws std::out_of_range for unknown ids.
void apply_pauli(StateRegister& reg, QubitId q, PauliOp op);

/// Applies C0 or C1 with the given control and target. control == target
/// throws std::invalid_argument.
void apply_controlled(StateRegister& reg, QubitId control, QubitId target, ControlledOp op);

void apply_single(StateRegister& reg, QubitId q, const Eigen::Matrix2cd& m);

/// `m` acts on |first second>, first as the high bit. The caller guarantees
/// unitarity when norm must be preserved.
void apply_two(StateRegister& reg, QubitId first, QubitId second, const Eigen::Matrix4cd& m);

void apply_hadamard(StateRegister& reg, QubitId q);

/// Kronecker product a (x) b.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace qsdc::qcore
