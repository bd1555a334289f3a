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

#include "qsdc/ghzfab/ghzfab.h"

#include <cmath>
#include <stdexcept>

#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"

namespace qsdc::ghzfab {
namespace {

using qcore::QubitId;
using qcore::StateRegister;

void require_phi_plus(const StateRegister& epr, const char* what) {
  if (epr.num_qubits() != 2) {
    throw FabricationError(std::string(what) + ": expected a two-qubit pair, got " +
                           std::to_string(epr.num_qubits()) + " qubits");
  }
  const auto qs = epr.qubits();
  const StateRegister ref = qcore::make_bell(qs[0], qs[1]);
  if (std::abs(qcore::fidelity(ref, epr) - 1.0) > qcore::kTolerance) {
    throw FabricationError(std::string(what) + ": pair is not Phi+");
  }
}

}  // namespace

QubitId GhzAllocation::of(qcore::PartyId p) const {
  for (const auto& [party, q] : qubits) {
    if (party == p) return q;
  }
  throw std::out_of_range("no qubit allocated to " + p.name());
}

std::vector<QubitId> GhzAllocation::order() const {
  std::vector<QubitId> out;
  out.reserve(qubits.size());
  for (const auto& entry : qubits) out.push_back(entry.second);
  return out;
}

StateRegister extend(const StateRegister& ghz, QubitId server, const StateRegister& epr,
                     QubitId server_new, qcore::Rng& rng) {
  require_phi_plus(epr, "extend");
  if (!ghz.contains(server)) throw std::out_of_range("extend: server qubit not in register");
  if (!epr.contains(server_new)) throw std::out_of_range("extend: new server qubit not in pair");
  const auto eq = epr.qubits();
  const QubitId far = eq[0] == server_new ? eq[1] : eq[0];

  StateRegister reg = qcore::compose(ghz, permute(epr, std::vector<QubitId>{server_new, far}));
  qcore::apply_controlled(reg, server, server_new, qcore::ControlledOp::kC0);
  if (qcore::measure_z(reg, server_new, rng) == 1) {
    qcore::apply_pauli(reg, far, qcore::PauliOp::kX);
    qcore::apply_pauli(reg, server_new, qcore::PauliOp::kX);
  }
  return qcore::drop_qubit(reg, server_new);
}

StateRegister extend_epr(const StateRegister& epr_iq, const StateRegister& epr_qj,
                         std::pair<QubitId, QubitId> server_qubits, qcore::Rng& rng) {
  require_phi_plus(epr_iq, "extend_epr");
  const auto [q, q_new] = server_qubits;
  if (!epr_iq.contains(q)) throw std::out_of_range("extend_epr: server qubit not in first pair");
  const auto iq = epr_iq.qubits();
  const QubitId i = iq[0] == q ? iq[1] : iq[0];
  StateRegister out = extend(epr_iq, q, epr_qj, q_new, rng);
  const auto oq = out.qubits();
  return qcore::permute(out, std::vector<QubitId>{i, q, oq.back()});
}

GhzAllocation allocate_ghz(comms::Session& session, std::span<const qcore::PartyId> parties,
                           qcore::Rng& rng) {
  if (parties.size() < 2) throw std::invalid_argument("allocate_ghz: need at least two parties");
  for (const qcore::PartyId& p : parties) {
    if (p.role != qcore::Role::kUser) {
      throw std::invalid_argument("allocate_ghz: " + p.name() + " is not a user");
    }
    if (!session.authenticated(p.index)) {
      throw FabricationError("allocate_ghz: " + p.name() + " is not authenticated");
    }
    if (session.epr_stock(p.index).empty()) {
      throw FabricationError("allocate_ghz: EPR stock of " + p.name() + " exhausted");
    }
  }

  std::vector<auth::RetainedPair> pairs;
  for (const qcore::PartyId& p : parties) {
    auto& stock = session.epr_stock(p.index);
    pairs.push_back(std::move(stock.front()));
    stock.pop_front();
  }

  const QubitId server_q = pairs.front().server;
  require_phi_plus(pairs.front().reg, "allocate_ghz");
  StateRegister reg = pairs.front().reg;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    reg = extend(reg, server_q, pairs[k].reg, pairs[k].server, rng);
  }

  GhzAllocation out;
  out.session_id = session.id();
  for (std::size_t k = 0; k + 1 < parties.size(); ++k) {
    out.qubits.emplace_back(parties[k], pairs[k].user);
  }
  out.qubits.emplace_back(session.server(), server_q);
  out.qubits.emplace_back(parties.back(), pairs.back().user);
  out.reg = qcore::permute(reg, out.order());

  comms::Transcript& log = session.transcript();
  if (log.recording()) {
    comms::Json members = comms::Json::array();
    for (const auto& [party, q] : out.qubits) {
      members.push_back(comms::Json{{"party", party.name()}, {"qubit", q.index}});
    }
    log.append(session.server().name(), "allocate_ghz", comms::Json{{"qubits", members}});
  } else {
    log.append(session.server().name(), "allocate_ghz");
  }
  return out;
}

}  // namespace qsdc::ghzfab
