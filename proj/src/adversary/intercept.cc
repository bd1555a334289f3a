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

#include "qsdc/adversary/intercept.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"
#include "qsdc/qcore/random_state.h"

namespace qsdc::adversary {
namespace {

using qcore::Complex;

bool unit(double v) { return std::abs(v - 1.0) <= qcore::kTolerance; }

Complex phase(qcore::Rng& rng) {
  return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
}

// Splits a 2-vector into (norm, direction); the direction defaults to
// `fallback` when the norm vanishes.
std::pair<Complex, Eigen::Vector2cd> split(const Eigen::Vector2cd& v,
                                           const Eigen::Vector2cd& fallback) {
  const double n = v.norm();
  if (n < 1e-12) return {0.0, fallback};
  return {n, v / n};
}

}  // namespace

void InterceptParams::validate() const {
  if (!unit(std::norm(alpha) + std::norm(beta)) || !unit(std::norm(alpha_p) + std::norm(beta_p))) {
    throw std::invalid_argument("intercept amplitudes are not normalized");
  }
  for (const auto* e : {&eps00, &eps01, &eps10, &eps11}) {
    if (!unit(e->squaredNorm())) throw std::invalid_argument("intercept ancilla state not normalized");
  }
  if (std::abs(image0().dot(image1())) > qcore::kTolerance) {
    throw std::invalid_argument("intercept images of |0> and |1> are not orthogonal");
  }
}

Eigen::Vector4cd InterceptParams::image0() const {
  Eigen::Vector4cd v;
  v << alpha * eps00, beta * eps01;
  return v;
}

Eigen::Vector4cd InterceptParams::image1() const {
  Eigen::Vector4cd v;
  v << beta_p * eps10, alpha_p * eps11;
  return v;
}

InterceptParams InterceptParams::trivial() { return InterceptParams{}; }

InterceptParams InterceptParams::z_monitor(qcore::Rng& rng) {
  InterceptParams p;
  p.alpha = phase(rng);
  p.alpha_p = phase(rng);
  const Eigen::Vector2cd v = qcore::random_qubit(rng);
  p.eps00 = v;
  p.eps11 = Eigen::Vector2cd(-std::conj(v[1]), std::conj(v[0])) * phase(rng);
  p.eps01 = p.eps11;
  p.eps10 = p.eps00;
  return p;
}

InterceptParams InterceptParams::haar(qcore::Rng& rng) {
  const Eigen::MatrixXcd u = qcore::random_unitary(4, rng);
  const Eigen::Vector2cd e0(1.0, 0.0);
  InterceptParams p;
  std::tie(p.alpha, p.eps00) = split(u.block(0, 0, 2, 1), e0);
  std::tie(p.beta, p.eps01) = split(u.block(2, 0, 2, 1), e0);
  std::tie(p.beta_p, p.eps10) = split(u.block(0, 2, 2, 1), e0);
  std::tie(p.alpha_p, p.eps11) = split(u.block(2, 2, 2, 1), e0);
  return p;
}

double intercept_disturbance(const InterceptParams& p) {
  return 1.0 - (p.alpha * p.eps00 + p.alpha_p * p.eps11).squaredNorm() / 4.0;
}

InterceptTap::InterceptTap(const InterceptParams& params) : params_(params) {
  params_.validate();
  Eigen::MatrixXcd cols(4, 2);
  cols.col(0) = params_.image0();
  cols.col(1) = params_.image1();
  unitary_ = qcore::complete_unitary(cols, {0, 2});
}

void InterceptTap::on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight,
                              comms::Direction dir, comms::TapContext& ctx) {
  if (dir != comms::Direction::kForward) return;
  const qcore::QubitId a = ctx.ids.allocate(qcore::PartyId::attacker());
  reg = qcore::compose(reg, qcore::StateRegister::computational({a}, 0));
  qcore::apply_two(reg, in_flight, a, unitary_);
  const int bit = qcore::measure_z(reg, a, ctx.rng);
  reg = qcore::drop_qubit(reg, a);
  guesses_.push_back(bit ? qcore::PauliOp::kX : qcore::PauliOp::kI);
  ctx.transcript.append("eve", "intercept",
                        ctx.transcript.recording()
                            ? comms::Json{{"qubit", in_flight.index}, {"ancilla_z", bit}}
                            : comms::Json::object());
}

std::shared_ptr<InterceptTap> intercept_tap(const InterceptParams& params) {
  return std::make_shared<InterceptTap>(params);
}

double guess_accuracy(const InterceptTap& tap, const comms::Transcript& transcript,
                      std::size_t sender_slot) {
  const auto& symbols = transcript.symbols();
  const auto& guesses = tap.guesses();
  if (guesses.size() != symbols.size()) {
    throw std::invalid_argument("tap saw " + std::to_string(guesses.size()) + " qubits for " +
                                std::to_string(symbols.size()) + " symbols");
  }
  if (symbols.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k].ops.at(sender_slot) == guesses[k]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(symbols.size());
}

}  // namespace qsdc::adversary
