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
#include <span>

#include "qsdc/qcore/state_register.h"

namespace qsdc::qcore {

/// Reduced density matrix of `keep` (in that order), tracing out the rest.
Eigen::MatrixXcd reduced_density_matrix(const StateRegister& reg, std::span<const QubitId> keep);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& rho);

/// -Tr(rho log2 rho), with 0 log 0 = 0.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

}  // namespace qsdc::qcore
