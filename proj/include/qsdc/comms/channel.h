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

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsdc/comms/transcript.h"
#include "qsdc/qcore/rng.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::comms {

enum class ChannelKind : std::uint8_t { kQuantum, kClassical };

/// kForward runs from the channel's first endpoint to its second.
enum class Direction : std::uint8_t { kForward, kBackward };

/// Raised when a channel is used after close().
class ChannelClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What an attack tap may touch while a qubit is in flight.
struct TapContext {
  qcore::QubitAllocator& ids;
  qcore::Rng& rng;
  Transcript& transcript;
};

/// An adversary attached to a channel. Taps see quantum traffic in both
/// directions and may read classical publications, never forge them.
class AttackModel {
 public:
  virtual ~AttackModel() = default;

  virtual std::string name() const = 0;

  /// Called while `in_flight` crosses the channel. May adjoin ancillas to
  /// `reg` and act on them.
  virtual void on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight, Direction dir,
                          TapContext& ctx) {
    (void)reg, (void)in_flight, (void)dir, (void)ctx;
  }

  /// A tap that impersonates the receiving endpoint returns the qubit it
  /// sends back in place of the honest reply.
  virtual std::optional<qcore::QubitId> impersonate(qcore::StateRegister& reg,
                                                    qcore::QubitId received, TapContext& ctx) {
    (void)reg, (void)received, (void)ctx;
    return std::nullopt;
  }

  virtual void observe(const std::string& action, const Json& payload) {
    (void)action, (void)payload;
  }
};

/// In-order lossless link between two parties. Every send is appended to
/// the transcript.
class Channel {
 public:
  Channel(qcore::PartyId a, qcore::PartyId b, ChannelKind kind, Transcript& transcript,
          qcore::QubitAllocator& ids);

  qcore::PartyId first() const { return a_; }
  qcore::PartyId second() const { return b_; }
  ChannelKind kind() const { return kind_; }
  std::string label() const;
  qcore::QubitAllocator& ids() const { return *ids_; }
  Transcript& transcript() const { return *transcript_; }

  void attach(std::shared_ptr<AttackModel> tap) { tap_ = std::move(tap); }
  AttackModel* tap() const { return tap_.get(); }

  void close() { open_ = false; }
  bool is_open() const { return open_; }

  /// Hands `q` from `from` to the other endpoint; an attached tap acts on
  /// the register in flight.
  void send_qubit(qcore::StateRegister& reg, qcore::QubitId q, qcore::PartyId from,
                  qcore::Rng& rng);

  /// Lets a tap answer in place of the party that just received `received`.
  std::optional<qcore::QubitId> intercept_reply(qcore::StateRegister& reg,
                                                qcore::QubitId received, qcore::Rng& rng);

  /// Classical broadcast; taps observe it.
  void publish(qcore::PartyId from, const std::string& action, Json payload);

  /// Sequence numbers of this channel's events.
  const std::vector<std::uint64_t>& log() const { return log_; }

 private:
  void require_open() const;
  qcore::PartyId peer(qcore::PartyId from) const;

  qcore::PartyId a_;
  qcore::PartyId b_;
  ChannelKind kind_;
  Transcript* transcript_;
  qcore::QubitAllocator* ids_;
  std::shared_ptr<AttackModel> tap_;
  std::vector<std::uint64_t> log_;
  bool open_ = true;
};

}  // namespace qsdc::comms
