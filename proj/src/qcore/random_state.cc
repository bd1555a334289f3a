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

#include "qsdc/qcore/random_state.h"

#include <cmath>
#include <stdexcept>

namespace qsdc::qcore {

StateRegister random_state(std::vector<QubitId> qubits, Rng& rng) {
  std::vector<Complex> amps(std::size_t{1} << qubits.size());
  double s = 0.0;
  for (Complex& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
    s += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(s);
  for (Complex& a : amps) a *= scale;
  return StateRegister(std::move(qubits), std::move(amps));
}

Eigen::MatrixXcd random_unitary(Eigen::Index dim, Rng& rng) {
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < dim; ++c) {
    const Complex d = r(c, c);
    if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
  }
  return q;
}

Eigen::Vector2cd random_qubit(Rng& rng) {
  Eigen::Vector2cd v;
  for (int k = 0; k < 2; ++k) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(k) = Complex(re, im);
  }
  return v.normalized();
}

Eigen::MatrixXcd complete_unitary(const Eigen::MatrixXcd& columns,
                                  const std::vector<Eigen::Index>& fixed_at) {
  const Eigen::Index dim = columns.rows();
  if (static_cast<Eigen::Index>(fixed_at.size()) != columns.cols()) {
    throw std::invalid_argument("complete_unitary: one position per column required");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<bool> used(static_cast<std::size_t>(dim), false);
  std::vector<Eigen::VectorXcd> basis;
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    out.col(fixed_at[c]) = columns.col(c);
    used[fixed_at[c]] = true;
    basis.emplace_back(columns.col(c));
  }
  Eigen::Index next_free = 0;
  for (Eigen::Index e = 0; e < dim && static_cast<Eigen::Index>(basis.size()) < dim; ++e) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Unit(dim, e);
    for (const auto& b : basis) v -= b.dot(v) * b;
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() < 1e-6) continue;
    v.normalize();
    while (used[next_free]) ++next_free;
    out.col(next_free) = v;
    used[next_free] = true;
    basis.push_back(v);
  }
  return out;
}

}  // namespace qsdc::qcore
