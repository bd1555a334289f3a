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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qsdc/qcore/types.h"

namespace qsdc::comms {

using Json = nlohmann::ordered_json;

enum class Mode : std::uint8_t { kPartial, kFull };

std::string to_string(Mode m);
/// "partial" or "full"; throws std::invalid_argument otherwise.
Mode parse_mode(const std::string& s);

struct Event {
  std::uint64_t seq = 0;
  std::string actor;
  std::string action;
  Json payload;
};

struct TranscriptHeader {
  int n_users = 0;
  std::string mode;
  std::uint64_t seed = 0;
  std::size_t pad_len = 0;
};

/// Per-symbol bookkeeping of one transmission. Sender-side fields (`sent`,
/// `ops`) are what the senders reveal during the eavesdropping check.
struct SymbolRecord {
  std::size_t index = 0;
  bool decoy = false;
  std::string sent;
  std::vector<qcore::PauliOp> ops;
  qcore::GhzOutcome measurement;
  qcore::XOutcome publication = qcore::XOutcome::kPlus;
  std::string decoded;
  bool alarm = false;
};

/// Ordered, replayable log of a session. Sequence numbers are monotone and
/// assigned at append time.
class Transcript {
 public:
  TranscriptHeader& header() { return header_; }
  const TranscriptHeader& header() const { return header_; }

  std::uint64_t append(std::string actor, std::string action, Json payload = Json::object());

  /// With recording off, append() still advances the sequence counter but
  /// keeps no event bodies (for long Monte Carlo runs).
  void set_recording(bool on) { recording_ = on; }
  bool recording() const { return recording_; }

  std::uint64_t next_seq() const { return next_seq_; }
  const std::vector<Event>& events() const { return events_; }

  std::vector<SymbolRecord>& symbols() { return symbols_; }
  const std::vector<SymbolRecord>& symbols() const { return symbols_; }

  /// Decoded message per receiver name.
  std::map<std::string, std::string>& final_bits() { return final_; }
  const std::map<std::string, std::string>& final_bits() const { return final_; }

  /// {"header": {n_users, mode, seed, pad_len}, "events": [{seq, actor,
  /// action, payload}...], "final": {...}} with fixed key order.
  Json to_json() const;
  std::string dump() const { return to_json().dump(1); }

 private:
  TranscriptHeader header_;
  std::vector<Event> events_;
  std::vector<SymbolRecord> symbols_;
  std::map<std::string, std::string> final_;
  std::uint64_t next_seq_ = 0;
  bool recording_ = true;
};

}  // namespace qsdc::comms
