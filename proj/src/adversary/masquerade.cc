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

#include "qsdc/adversary/masquerade.h"

#include <cmath>
#include <stdexcept>

#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/random_state.h"

namespace qsdc::adversary {
namespace {

double sq(qcore::Complex z) { return std::norm(z); }

}  // namespace

void MasqueradeParams::validate() const {
  double n0 = 0.0;
  double n1 = 0.0;
  qcore::Complex overlap = 0.0;
  for (int k = 0; k < 4; ++k) {
    n0 += sq(row0[k]);
    n1 += sq(row1[k]);
    overlap += std::conj(row0[k]) * row1[k];
  }
  if (std::abs(n0 - 1.0) > qcore::kTolerance || std::abs(n1 - 1.0) > qcore::kTolerance) {
    throw std::invalid_argument("masquerade coefficients are not normalized");
  }
  if (std::abs(overlap) > qcore::kTolerance) {
    throw std::invalid_argument("masquerade images of |0> and |1> are not orthogonal");
  }
}

MasqueradeParams MasqueradeParams::random(qcore::Rng& rng) {
  const Eigen::MatrixXcd u = qcore::random_unitary(4, rng);
  MasqueradeParams p;
  for (int k = 0; k < 4; ++k) {
    p.row0[k] = u(k, 0);
    p.row1[k] = u(k, 2);
  }
  return p;
}

MasqueradeParams MasqueradeParams::identity_like() { return MasqueradeParams{}; }

MasqueradeParams MasqueradeParams::swap_like() {
  MasqueradeParams p;
  p.row0 = {0.0, 0.0, 1.0, 0.0};
  p.row1 = {0.0, 1.0, 0.0, 0.0};
  return p;
}

double masquerade_detection(const MasqueradeParams& p, auth::KeyPair key) {
  const auto& [a0, b0, g0, d0] = p.row0;
  const auto& [a1, b1, g1, d1] = p.row1;
  const double p11 = (sq(b0 + b1) + sq(d0 + d1) + sq(a0 - a1) + sq(g0 - g1)) / 4.0;
  switch (key.value()) {
    case 0:
      return (sq(a1) + sq(g1) + sq(b0) + sq(d0)) / 2.0;
    case 1:
      return (sq(a0) + sq(g0) + sq(b1) + sq(d1)) / 2.0;
    case 2:
      return 1.0 - p11;
    default:
      return p11;
  }
}

double masquerade_detection_total(const MasqueradeParams& p) {
  double sum = 0.0;
  for (int v = 0; v < 4; ++v) sum += masquerade_detection(p, auth::KeyPair::from_value(v));
  return sum / 4.0;
}

double masquerade_detection_claimed(const MasqueradeParams& p, auth::KeyPair key) {
  if (key.first == 0) return masquerade_detection(p, key);
  return masquerade_detection(p, auth::KeyPair{0, static_cast<std::uint8_t>(key.second ^ 1)});
}

MasqueradeTap::MasqueradeTap(const MasqueradeParams& params) : params_(params) {
  params_.validate();
  Eigen::MatrixXcd cols(4, 2);
  for (int k = 0; k < 4; ++k) {
    cols(k, 0) = params_.row0[k];
    cols(k, 1) = params_.row1[k];
  }
  // Inputs |u a> = |00> and |10> are columns 0 and 2.
  unitary_ = qcore::complete_unitary(cols, {0, 2});
}

std::optional<qcore::QubitId> MasqueradeTap::impersonate(qcore::StateRegister& reg,
                                                         qcore::QubitId received,
                                                         comms::TapContext& ctx) {
  const qcore::QubitId a = ctx.ids.allocate(qcore::PartyId::attacker());
  reg = qcore::compose(reg, qcore::StateRegister::computational({a}, 0));
  qcore::apply_two(reg, received, a, unitary_);
  if (ctx.transcript.recording()) {
    ctx.transcript.append("eve", "impersonate",
                          comms::Json{{"intercepted", received.index}, {"ancilla", a.index}});
  } else {
    ctx.transcript.append("eve", "impersonate");
  }
  return a;
}

std::shared_ptr<MasqueradeTap> masquerade_tap(const MasqueradeParams& params) {
  return std::make_shared<MasqueradeTap>(params);
}

}  // namespace qsdc::adversary
