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
#include <vector>

#include "qsdc/qcore/rng.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::qcore {

/// Haar-random pure state over `qubits`.
StateRegister random_state(std::vector<QubitId> qubits, Rng& rng);

/// Haar-random unitary of the given dimension (QR of a Ginibre matrix with
/// the phase correction on R's diagonal).
Eigen::MatrixXcd random_unitary(Eigen::Index dim, Rng& rng);

/// Random unit 2-vector.
Eigen::Vector2cd random_qubit(Rng& rng);

/// Extends orthonormal columns to a full unitary by Gram-Schmidt against
/// the standard basis. Columns listed in `fixed_at` keep their position.
Eigen::MatrixXcd complete_unitary(const Eigen::MatrixXcd& columns,
                                  const std::vector<Eigen::Index>& fixed_at);

}  // namespace qsdc::qcore
