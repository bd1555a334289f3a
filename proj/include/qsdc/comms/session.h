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

#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "qsdc/auth/auth.h"
#include "qsdc/comms/channel.h"
#include "qsdc/comms/transcript.h"
#include "qsdc/qcore/rng.h"

namespace qsdc::comms {

struct SessionConfig {
  int n_users = 2;
  Mode mode = Mode::kPartial;
  std::uint64_t seed = 0;
  std::size_t auth_rounds = auth::kDefaultRounds;
  double auth_threshold = auth::kDefaultThreshold;
  /// Share of GHZ allocations set aside as decoys for the eavesdropping check.
  double decoy_fraction = 0.1;
};

/// One protocol run: the server, users u1..uN (uN receives), their channels,
/// the session RNG and the transcript. Single-threaded; independent
/// sessions may run on different threads.
class Session {
 public:
  explicit Session(SessionConfig config);

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const SessionConfig& config() const { return config_; }
  int n_users() const { return config_.n_users; }
  Mode mode() const { return config_.mode; }
  std::uint64_t id() const { return config_.seed; }

  qcore::Rng& rng() { return rng_; }
  qcore::QubitAllocator& ids() { return ids_; }
  Transcript& transcript() { return transcript_; }
  const Transcript& transcript() const { return transcript_; }

  qcore::PartyId server() const { return qcore::PartyId::server(); }
  qcore::PartyId user(int k) const;
  qcore::PartyId receiver() const { return user(config_.n_users); }
  /// u1..u(N-1).
  std::vector<qcore::PartyId> senders() const;
  /// Party performing the GHZ measurement: the receiver in partial mode,
  /// the server in full mode.
  qcore::PartyId measurer() const;

  /// Quantum channel server~uk used for authentication.
  Channel& auth_channel(int k);
  /// Quantum channel from sender uk to the measurer.
  Channel& uplink(int k);
  /// Classical channel between the server and the receiver.
  Channel& server_link();
  /// Classical channel from sender uk to the receiver.
  Channel& reveal_link(int k);

  /// Runs the handshake for uk with a fresh key drawn from the session RNG.
  const auth::AuthResult& authenticate(int k);
  void authenticate_all();
  bool authenticated(int k) const;
  bool any_terminated() const;
  const auth::AuthResult* auth_result(int k) const;

  /// Retained EPR pairs of uk, oldest first.
  std::deque<auth::RetainedPair>& epr_stock(int k);

 private:
  struct UserState {
    std::unique_ptr<Channel> auth_channel;
    std::unique_ptr<Channel> uplink;
    std::unique_ptr<Channel> reveal_link;
    std::optional<auth::AuthResult> auth;
    std::deque<auth::RetainedPair> stock;
  };

  UserState& state(int k);
  const UserState& state(int k) const;

  SessionConfig config_;
  qcore::Rng rng_;
  qcore::QubitAllocator ids_;
  Transcript transcript_;
  std::vector<UserState> users_;
  std::unique_ptr<Channel> server_link_;
};

}  // namespace qsdc::comms
