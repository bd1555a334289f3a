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

// EPR + controlled-NOT authentication between the server and one user.
//
// One round, for key pair (a, b):
//   1. server prepares Phi+ over (q, u) and sends u to the user;
//   2. user prepares n = |a XOR b> and applies C_a (C0 for a = 0, C1 for
//      a = 1) with u as control and n as target, keeps u, returns n;
//   3. server applies the same C_a with q as control and n as target and
//      measures n in Z. The round accepts iff the result is a XOR b.
// An honest round leaves (q, u) in Phi+, which is retained for GHZ
// fabrication.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qsdc/comms/channel.h"
#include "qsdc/qcore/rng.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::auth {

inline constexpr double kDefaultThreshold = 0.05;
inline constexpr std::size_t kDefaultRounds = 64;

struct KeyPair {
  std::uint8_t first = 0;
  std::uint8_t second = 0;

  int check_bit() const { return first ^ second; }
  qcore::ControlledOp controlled_op() const {
    return first ? qcore::ControlledOp::kC1 : qcore::ControlledOp::kC0;
  }
  /// 0..3 as first*2 + second.
  int value() const { return first * 2 + second; }
  static KeyPair from_value(int v) {
    return {static_cast<std::uint8_t>((v >> 1) & 1), static_cast<std::uint8_t>(v & 1)};
  }

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

class KeyExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shared authentication key A_1..A_2m, consumed two bits per round.
class AuthKey {
 public:
  explicit AuthKey(std::vector<std::uint8_t> bits);
  static AuthKey random(std::size_t pairs, qcore::Rng& rng);

  std::size_t size() const { return bits_.size(); }
  std::size_t pairs_remaining() const { return (bits_.size() - cursor_) / 2; }
  KeyPair next_pair();

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t cursor_ = 0;
};

enum class RoundOutcome : std::uint8_t { kAccept, kReject };
enum class Verdict : std::uint8_t { kAuthenticated, kTerminated };

struct AuthRound {
  std::size_t round_index = 0;
  KeyPair key_pair;
  RoundOutcome outcome = RoundOutcome::kReject;
  int measured_value = 0;
};

/// The (q, u) pair left over by an accepted round. Under attack the
/// register may also carry adversary ancillas.
struct RetainedPair {
  qcore::StateRegister reg;
  qcore::QubitId server;
  qcore::QubitId user;
};

struct RoundResult {
  AuthRound round;
  std::optional<RetainedPair> pair;
};

struct AuthResult {
  std::vector<AuthRound> rounds;
  double error_rate = 0.0;
  Verdict verdict = Verdict::kTerminated;
  std::vector<RetainedPair> pairs;
};

/// One handshake round over `channel` (server = first endpoint, user =
/// second). Throws comms::ChannelClosed on a closed channel.
RoundResult run_auth_round(std::size_t round_index, KeyPair key_pair, comms::Channel& channel,
                           qcore::Rng& rng);

/// Exact rejection probability of one round. Only valid for taps whose
/// action is unitary (no mid-flight measurement); `rng` is still consumed
/// by the channel plumbing.
double rejection_probability(KeyPair key_pair, comms::Channel& channel, qcore::Rng& rng);

/// Runs `rounds` rounds, consuming the key; terminated iff the error rate
/// exceeds `threshold`. Accepted pairs are returned for GHZ fabrication
/// only when the user is authenticated.
AuthResult authenticate_user(AuthKey& key, std::size_t rounds, double threshold,
                             comms::Channel& channel, qcore::Rng& rng);

}  // namespace qsdc::auth
