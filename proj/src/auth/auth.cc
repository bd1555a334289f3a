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

#include "qsdc/auth/auth.h"

#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"

namespace qsdc::auth {
namespace {

using qcore::QubitId;
using qcore::StateRegister;

// State of a round just before the server's Z measurement of n.
struct PreparedRound {
  StateRegister reg;
  QubitId q;
  QubitId u;
  QubitId n;
};

PreparedRound prepare_round(std::size_t round_index, KeyPair key_pair, comms::Channel& channel,
                            qcore::Rng& rng) {
  if (!channel.is_open()) throw comms::ChannelClosed("channel " + channel.label() + " is closed");
  const qcore::PartyId server = channel.first();
  const qcore::PartyId user = channel.second();
  comms::Transcript& log = channel.transcript();
  const bool rec = log.recording();
  const qcore::ControlledOp op = key_pair.controlled_op();

  const QubitId q = channel.ids().allocate(server);
  const QubitId u = channel.ids().allocate(user);
  StateRegister reg = qcore::make_bell(q, u);
  log.append(server.name(), "prepare_epr",
             rec ? comms::Json{{"round", round_index}, {"q", q.index}, {"u", u.index}}
                 : comms::Json::object());
  channel.send_qubit(reg, u, server, rng);

  QubitId n;
  if (auto forged = channel.intercept_reply(reg, u, rng)) {
    n = *forged;
  } else {
    n = channel.ids().allocate(user);
    reg = qcore::compose(reg, StateRegister::computational({n}, key_pair.check_bit()));
    qcore::apply_controlled(reg, u, n, op);
    log.append(user.name(), "encode_auth",
               rec ? comms::Json{{"round", round_index}, {"n", n.index}} : comms::Json::object());
  }
  channel.send_qubit(reg, n, user, rng);

  qcore::apply_controlled(reg, q, n, op);
  return PreparedRound{std::move(reg), q, u, n};
}

}  // namespace

AuthKey::AuthKey(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.size() % 2 != 0) throw std::invalid_argument("authentication key must have even length");
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("authentication key bits must be 0 or 1");
  }
}

AuthKey AuthKey::random(std::size_t pairs, qcore::Rng& rng) {
  std::vector<std::uint8_t> bits(2 * pairs);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.bit());
  return AuthKey(std::move(bits));
}

KeyPair AuthKey::next_pair() {
  if (pairs_remaining() == 0) throw KeyExhausted("authentication key exhausted");
  const KeyPair kp{bits_[cursor_], bits_[cursor_ + 1]};
  cursor_ += 2;
  return kp;
}

RoundResult run_auth_round(std::size_t round_index, KeyPair key_pair, comms::Channel& channel,
                           qcore::Rng& rng) {
  PreparedRound pr = prepare_round(round_index, key_pair, channel, rng);
  const int value = qcore::measure_z(pr.reg, pr.n, rng);
  const bool accept = value == key_pair.check_bit();

  comms::Transcript& log = channel.transcript();
  log.append(channel.first().name(), "verify_auth",
             log.recording() ? comms::Json{{"round", round_index},
                                           {"value", value},
                                           {"outcome", accept ? "accept" : "reject"}}
                             : comms::Json::object());

  RoundResult result;
  result.round = AuthRound{round_index, key_pair,
                           accept ? RoundOutcome::kAccept : RoundOutcome::kReject, value};
  if (accept) {
    result.pair = RetainedPair{qcore::drop_qubit(pr.reg, pr.n), pr.q, pr.u};
  }
  return result;
}

double rejection_probability(KeyPair key_pair, comms::Channel& channel, qcore::Rng& rng) {
  const PreparedRound pr = prepare_round(0, key_pair, channel, rng);
  const QubitId qs[] = {pr.n};
  const auto probs = qcore::outcome_probabilities(pr.reg, qs, qcore::MeasurementBasis::z());
  return probs[key_pair.check_bit() ^ 1];
}

AuthResult authenticate_user(AuthKey& key, std::size_t rounds, double threshold,
                             comms::Channel& channel, qcore::Rng& rng) {
  if (rounds > key.pairs_remaining()) {
    throw KeyExhausted("authentication needs " + std::to_string(rounds) + " key pairs, " +
                       std::to_string(key.pairs_remaining()) + " left");
  }
  AuthResult out;
  out.rounds.reserve(rounds);
  std::vector<RetainedPair> kept;
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    RoundResult r = run_auth_round(i, key.next_pair(), channel, rng);
    if (r.round.outcome == RoundOutcome::kReject) ++rejected;
    if (r.pair) kept.push_back(std::move(*r.pair));
    out.rounds.push_back(r.round);
  }
  out.error_rate = rounds == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(rounds);
  out.verdict = out.error_rate > threshold ? Verdict::kTerminated : Verdict::kAuthenticated;
  if (out.verdict == Verdict::kAuthenticated) out.pairs = std::move(kept);

  comms::Transcript& log = channel.transcript();
  log.append(channel.first().name(), "auth_verdict",
             comms::Json{{"user", channel.second().name()},
                         {"rounds", rounds},
                         {"error_rate", out.error_rate},
                         {"verdict", out.verdict == Verdict::kAuthenticated ? "authenticated"
                                                                            : "terminated"}});
  return out;
}

}  // namespace qsdc::auth
