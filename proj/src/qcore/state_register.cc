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

#include "qsdc/qcore/state_register.h"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsdc::qcore {
namespace {

std::atomic<std::size_t> g_max_qubits{24};

void check_width(std::size_t n) {
  if (n > StateRegister::max_qubits()) {
    throw std::length_error("register width " + std::to_string(n) + " exceeds cap " +
                            std::to_string(StateRegister::max_qubits()));
  }
}

void check_distinct(std::span<const QubitId> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[i].index == ids[j].index) {
        throw std::invalid_argument("duplicate qubit id " + ids[i].name());
      }
    }
  }
}

}  // namespace

StateRegister::StateRegister(std::vector<QubitId> qubits, std::vector<Complex> amplitudes)
    : qubits_(std::move(qubits)), amps_(std::move(amplitudes)) {
  check_width(qubits_.size());
  check_distinct(qubits_);
  if (amps_.size() != (std::size_t{1} << qubits_.size())) {
    throw std::invalid_argument("amplitude count does not match 2^n");
  }
  if (std::abs(norm() - 1.0) > kTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

StateRegister StateRegister::computational(std::vector<QubitId> qubits, std::uint64_t index) {
  check_width(qubits.size());
  std::vector<Complex> amps(std::size_t{1} << qubits.size());
  amps.at(index) = 1.0;
  return StateRegister(std::move(qubits), std::move(amps));
}

StateRegister StateRegister::single(QubitId q, Complex a0, Complex a1) {
  return StateRegister({q}, {a0, a1});
}

bool StateRegister::contains(QubitId q) const {
  return std::any_of(qubits_.begin(), qubits_.end(),
                     [&](const QubitId& x) { return x.index == q.index; });
}

std::size_t StateRegister::slot(QubitId q) const {
  for (std::size_t k = 0; k < qubits_.size(); ++k) {
    if (qubits_[k].index == q.index) return k;
  }
  throw std::out_of_range("qubit " + q.name() + " is not in the register");
}

double StateRegister::norm() const {
  double s = 0.0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::size_t StateRegister::max_qubits() { return g_max_qubits.load(); }
void StateRegister::set_max_qubits(std::size_t n) { g_max_qubits.store(n); }

StateRegister make_bell(QubitId a, QubitId b, BellOutcome which) {
  const double h = std::numbers::sqrt2 / 2.0;
  std::vector<Complex> amps(4);
  switch (which) {
    case BellOutcome::kPhiPlus:
      amps[0] = h;
      amps[3] = h;
      break;
    case BellOutcome::kPhiMinus:
      amps[0] = h;
      amps[3] = -h;
      break;
    case BellOutcome::kPsiPlus:
      amps[1] = h;
      amps[2] = h;
      break;
    case BellOutcome::kPsiMinus:
      amps[1] = h;
      amps[2] = -h;
      break;
  }
  return StateRegister({a, b}, std::move(amps));
}

StateRegister make_ghz(std::span<const QubitId> ids) {
  if (ids.size() < 2) throw std::invalid_argument("make_ghz needs at least two qubits");
  return make_ghz_basis_state(ids, GhzOutcome{static_cast<int>(ids.size()), 0, false});
}

StateRegister make_ghz_basis_state(std::span<const QubitId> ids, const GhzOutcome& which) {
  const std::size_t n = ids.size();
  if (n < 2 || which.num_qubits != static_cast<int>(n)) {
    throw std::invalid_argument("GHZ basis state width mismatch");
  }
  check_width(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (which.pattern > (full >> 1)) throw std::invalid_argument("GHZ pattern has top bit set");
  const double h = std::numbers::sqrt2 / 2.0;
  std::vector<Complex> amps(std::size_t{1} << n);
  amps[which.pattern] = h;
  amps[full ^ which.pattern] = which.minus ? -h : h;
  return StateRegister(std::vector<QubitId>(ids.begin(), ids.end()), std::move(amps));
}

StateRegister compose(const StateRegister& a, const StateRegister& b) {
  for (const QubitId& q : b.qubits()) {
    if (a.contains(q)) throw std::invalid_argument("compose: overlapping qubit " + q.name());
  }
  std::vector<QubitId> ids(a.qubits().begin(), a.qubits().end());
  ids.insert(ids.end(), b.qubits().begin(), b.qubits().end());
  check_width(ids.size());
  const auto aa = a.amplitudes();
  const auto bb = b.amplitudes();
  std::vector<Complex> amps(aa.size() * bb.size());
  for (std::size_t i = 0; i < aa.size(); ++i) {
    if (aa[i] == Complex{}) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) amps[i * bb.size() + j] = aa[i] * bb[j];
  }
  StateRegister out;
  RegisterAccess::qubits(out) = std::move(ids);
  RegisterAccess::amps(out) = std::move(amps);
  return out;
}

StateRegister permute(const StateRegister& reg, std::span<const QubitId> order) {
  const std::size_t n = reg.num_qubits();
  if (order.size() != n) throw std::invalid_argument("permute: order has wrong length");
  check_distinct(order);
  // src_bit[k]: bit in the old index for the qubit at new slot k.
  std::vector<int> src_bit(n);
  for (std::size_t k = 0; k < n; ++k) src_bit[k] = reg.bit_position(order[k]);
  const auto in = reg.amplitudes();
  std::vector<Complex> amps(in.size());
  for (std::uint64_t idx = 0; idx < in.size(); ++idx) {
    std::uint64_t old = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if ((idx >> (n - 1 - k)) & 1U) old |= std::uint64_t{1} << src_bit[k];
    }
    amps[idx] = in[old];
  }
  StateRegister out;
  RegisterAccess::qubits(out) = std::vector<QubitId>(order.begin(), order.end());
  RegisterAccess::amps(out) = std::move(amps);
  return out;
}

StateRegister drop_qubit(const StateRegister& reg, QubitId q) {
  const std::size_t n = reg.num_qubits();
  const int bit = reg.bit_position(q);
  const std::uint64_t mask = std::uint64_t{1} << bit;
  const auto in = reg.amplitudes();

  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (std::uint64_t idx = 0; idx < in.size(); ++idx) {
    if (idx & mask) continue;
    const Complex a0 = in[idx];
    const Complex a1 = in[idx | mask];
    rho(0, 0) += a0 * std::conj(a0);
    rho(0, 1) += a0 * std::conj(a1);
    rho(1, 0) += a1 * std::conj(a0);
    rho(1, 1) += a1 * std::conj(a1);
  }
  const double purity = (rho * rho).trace().real();
  if (purity < 1.0 - 1e-8) {
    throw std::invalid_argument("drop_qubit: " + q.name() + " is entangled with the register");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(rho);
  const Eigen::Vector2cd e = eig.eigenvectors().col(1);

  std::vector<QubitId> ids;
  for (const QubitId& x : reg.qubits()) {
    if (x.index != q.index) ids.push_back(x);
  }
  std::vector<Complex> amps(std::size_t{1} << (n - 1));
  const std::uint64_t low = mask - 1;
  for (std::uint64_t idx = 0; idx < in.size(); ++idx) {
    if (idx & mask) continue;
    const std::uint64_t rest = ((idx >> 1) & ~low) | (idx & low);
    amps[rest] = std::conj(e(0)) * in[idx] + std::conj(e(1)) * in[idx | mask];
  }
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  const double scale = 1.0 / std::sqrt(s);
  for (Complex& a : amps) a *= scale;
  return StateRegister(std::move(ids), std::move(amps));
}

double fidelity(const StateRegister& a, const StateRegister& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity: width mismatch");
  const StateRegister bb = permute(b, a.qubits());
  Complex overlap{};
  const auto x = a.amplitudes();
  const auto y = bb.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) overlap += std::conj(x[i]) * y[i];
  return std::norm(overlap);
}

bool equal_up_to_phase(const StateRegister& a, const StateRegister& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  for (const QubitId& q : a.qubits()) {
    if (!b.contains(q)) return false;
  }
  const StateRegister bb = permute(b, a.qubits());
  const auto x = a.amplitudes();
  const auto y = bb.amplitudes();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[pivot])) pivot = i;
  }
  if (std::abs(y[pivot]) < tol) return false;
  const Complex phase = y[pivot] / x[pivot];
  const Complex unit = phase / std::abs(phase);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(y[i] - unit * x[i]) > tol) return false;
  }
  return true;
}

}  // namespace qsdc::qcore
