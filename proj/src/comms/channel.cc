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

#include "qsdc/comms/channel.h"

namespace qsdc::comms {

Channel::Channel(qcore::PartyId a, qcore::PartyId b, ChannelKind kind, Transcript& transcript,
                 qcore::QubitAllocator& ids)
    : a_(a), b_(b), kind_(kind), transcript_(&transcript), ids_(&ids) {
  if (a == b) throw std::invalid_argument("channel endpoints must differ");
}

std::string Channel::label() const {
  return a_.name() + (kind_ == ChannelKind::kQuantum ? "~" : "-") + b_.name();
}

void Channel::require_open() const {
  if (!open_) throw ChannelClosed("channel " + label() + " is closed");
}

qcore::PartyId Channel::peer(qcore::PartyId from) const {
  if (from == a_) return b_;
  if (from == b_) return a_;
  throw std::invalid_argument(from.name() + " is not an endpoint of " + label());
}

void Channel::send_qubit(qcore::StateRegister& reg, qcore::QubitId q, qcore::PartyId from,
                         qcore::Rng& rng) {
  require_open();
  if (kind_ != ChannelKind::kQuantum) {
    throw std::logic_error("cannot send a qubit over classical channel " + label());
  }
  const qcore::PartyId to = peer(from);
  reg.slot(q);
  Json payload = Json::object();
  if (transcript_->recording()) {
    payload["channel"] = label();
    payload["to"] = to.name();
    payload["qubit"] = q.index;
  }
  log_.push_back(transcript_->append(from.name(), "send_qubit", std::move(payload)));
  if (tap_) {
    TapContext ctx{*ids_, rng, *transcript_};
    tap_->on_transit(reg, q, from == a_ ? Direction::kForward : Direction::kBackward, ctx);
  }
}

std::optional<qcore::QubitId> Channel::intercept_reply(qcore::StateRegister& reg,
                                                       qcore::QubitId received,
                                                       qcore::Rng& rng) {
  require_open();
  if (!tap_) return std::nullopt;
  TapContext ctx{*ids_, rng, *transcript_};
  return tap_->impersonate(reg, received, ctx);
}

void Channel::publish(qcore::PartyId from, const std::string& action, Json payload) {
  require_open();
  peer(from);
  if (tap_) tap_->observe(action, payload);
  if (transcript_->recording()) payload["channel"] = label();
  log_.push_back(transcript_->append(from.name(), action, std::move(payload)));
}

}  // namespace qsdc::comms
