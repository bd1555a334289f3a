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

#include "qsdc/adversary/one_way.h"

#include <cmath>

#include "qsdc/auth/auth.h"
#include "qsdc/qcore/density.h"
#include "qsdc/qcore/gates.h"

namespace qsdc::adversary {
namespace {

using qcore::Complex;
using qcore::QubitId;
using qcore::StateRegister;

// (|x y n> + |x' y' n'>) / sqrt(2) with x, y given as single-qubit vectors.
StateRegister two_branch(const QubitId (&ids)[3], const Eigen::Vector2cd& a, int na,
                         const Eigen::Vector2cd& b, int nb) {
  std::vector<Complex> amps(8, 0.0);
  for (int q = 0; q < 2; ++q) {
    for (int u = 0; u < 2; ++u) {
      amps[4 * q + 2 * u + na] += a[q] * a[u] / std::sqrt(2.0);
      amps[4 * q + 2 * u + nb] += b[q] * b[u] / std::sqrt(2.0);
    }
  }
  return StateRegister({ids[0], ids[1], ids[2]}, amps);
}

StateRegister closed_form(int key, const QubitId (&ids)[3]) {
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2cd zero(1.0, 0.0);
  const Eigen::Vector2cd one(0.0, 1.0);
  const Eigen::Vector2cd plus(r, r);
  const Eigen::Vector2cd minus(r, -r);
  switch (key) {
    case 0:
      return two_branch(ids, zero, 0, one, 1);
    case 1:
      return two_branch(ids, zero, 1, one, 0);
    case 2:
      return two_branch(ids, plus, 1, minus, 0);
    default:
      return two_branch(ids, plus, 0, minus, 1);
  }
}

}  // namespace

HolevoReport holevo_one_way() {
  qcore::QubitAllocator alloc;
  const QubitId q = alloc.allocate(qcore::PartyId::server());
  const QubitId u = alloc.allocate(qcore::PartyId::user(1));
  const QubitId n = alloc.allocate(qcore::PartyId::user(1));
  const QubitId ids[3] = {q, u, n};
  const QubitId keep[] = {n};

  HolevoReport out;
  out.rho_n = Eigen::MatrixXcd::Zero(2, 2);
  double mean_entropy = 0.0;
  for (int v = 0; v < 4; ++v) {
    const auth::KeyPair key = auth::KeyPair::from_value(v);
    StateRegister reg = qcore::compose(qcore::make_bell(q, u),
                                       StateRegister::computational({n}, key.check_bit()));
    qcore::apply_controlled(reg, u, n, key.controlled_op());
    out.closed_form_fidelity[v] = qcore::fidelity(closed_form(v, ids), reg);
    out.rho_ni[v] = qcore::reduced_density_matrix(reg, keep);
    out.rho_n += out.rho_ni[v] / 4.0;
    mean_entropy += qcore::von_neumann_entropy(out.rho_ni[v]) / 4.0;
    out.states[v] = std::move(reg);
  }
  out.chi = qcore::von_neumann_entropy(out.rho_n) - mean_entropy;
  return out;
}

void OneWayTap::on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight,
                           comms::Direction dir, comms::TapContext& ctx) {
  if (dir != comms::Direction::kBackward) return;
  const QubitId e = ctx.ids.allocate(qcore::PartyId::attacker());
  reg = qcore::compose(reg, StateRegister::computational({e}, 0));
  qcore::apply_controlled(reg, in_flight, e, qcore::ControlledOp::kC0);
  ancillas_.push_back(e);
  ctx.transcript.append("eve", "copy_z",
                        ctx.transcript.recording()
                            ? comms::Json{{"qubit", in_flight.index}, {"ancilla", e.index}}
                            : comms::Json::object());
}

std::shared_ptr<OneWayTap> one_way_tap() { return std::make_shared<OneWayTap>(); }

}  // namespace qsdc::adversary
