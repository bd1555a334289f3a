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

// Shared GHZ states from retained authentication pairs.
//
// The server holds one qubit of every pair. To merge a pair (q', j) into a
// GHZ state that contains its qubit q it applies CNOT q -> q', measures q'
// in Z and, on outcome 1, has j's holder apply X. q' is then discarded.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qsdc/comms/session.h"
#include "qsdc/qcore/rng.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::ghzfab {

/// Raised when a retained pair is not Phi+ or the stock has run dry.
class FabricationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GhzAllocation {
  std::uint64_t session_id = 0;
  /// Qubit per party in GHZ order: senders, then the server, then the
  /// receiver (the last party listed in the request).
  std::vector<std::pair<qcore::PartyId, qcore::QubitId>> qubits;
  qcore::StateRegister reg;

  qcore::QubitId of(qcore::PartyId p) const;
  std::vector<qcore::QubitId> order() const;
};

/// Merges (i, q) and (q', j) into a GHZ state over (i, q, j). Both inputs
/// must be Phi+ over exactly those qubits.
qcore::StateRegister extend_epr(const qcore::StateRegister& epr_iq,
                                const qcore::StateRegister& epr_qj,
                                std::pair<qcore::QubitId, qcore::QubitId> server_qubits,
                                qcore::Rng& rng);

/// Adds the far end of `epr` (a Phi+ over (server_new, far)) to `ghz`,
/// which must contain `server`. The result lists ghz's qubits then `far`.
qcore::StateRegister extend(const qcore::StateRegister& ghz, qcore::QubitId server,
                            const qcore::StateRegister& epr, qcore::QubitId server_new,
                            qcore::Rng& rng);

/// Builds one GHZ state over `parties` plus the server, consuming the
/// oldest retained pair of every party. `parties` are users; the last one
/// is placed after the server qubit.
GhzAllocation allocate_ghz(comms::Session& session, std::span<const qcore::PartyId> parties,
                           qcore::Rng& rng);

}  // namespace qsdc::ghzfab
