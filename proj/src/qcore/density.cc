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

#include "qsdc/qcore/density.h"

#include <cmath>
#include <vector>

namespace qsdc::qcore {

Eigen::MatrixXcd reduced_density_matrix(const StateRegister& reg, std::span<const QubitId> keep) {
  // Move the kept qubits to the front; then rho = A A^dagger with A the
  // amplitude vector reshaped to (kept x rest).
  std::vector<QubitId> order(keep.begin(), keep.end());
  for (const QubitId& q : reg.qubits()) {
    bool kept = false;
    for (const QubitId& k : keep) kept = kept || k.index == q.index;
    if (!kept) order.push_back(q);
  }
  const StateRegister aligned = permute(reg, order);
  const auto rows = Eigen::Index{1} << keep.size();
  const auto cols = static_cast<Eigen::Index>(aligned.dimension()) / rows;
  Eigen::MatrixXcd a(rows, cols);
  const auto amps = aligned.amplitudes();
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) a(r, c) = amps[r * cols + c];
  }
  return a * a.adjoint();
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho, Eigen::EigenvaluesOnly);
  return eig.eigenvalues();
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  const Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > 1e-15) s -= ev(i) * std::log2(ev(i));
  }
  return s;
}

}  // namespace qsdc::qcore
