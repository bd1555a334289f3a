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

// Decode maps generated by brute force: every symbol is applied to a fresh
// GHZ state and the exact joint distribution of (GHZ outcome, X outcome)
// is recorded.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsdc/comms/transcript.h"
#include "qsdc/qcore/types.h"

namespace qsdc::comms {

/// Two symbols share a (GHZ outcome, publication) pair.
class DecodeCollision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (GHZ outcome, publication) pair that no symbol can produce.
class TamperingDetected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecodeEntry {
  std::string bits;
  std::vector<qcore::PauliOp> ops;
  qcore::GhzOutcome ghz;
  qcore::XOutcome pub = qcore::XOutcome::kPlus;
  double probability = 0.0;
};

class DecodeTable {
 public:
  DecodeTable(Mode mode, int n_users, std::vector<int> widths, std::vector<DecodeEntry> entries);

  Mode mode() const { return mode_; }
  int n_users() const { return n_users_; }
  const std::vector<int>& widths() const { return widths_; }
  /// Sorted by publication, then symbol, then GHZ outcome index.
  const std::vector<DecodeEntry>& entries() const { return entries_; }

  std::optional<std::string> lookup(const qcore::GhzOutcome& ghz, qcore::XOutcome pub) const;

 private:
  Mode mode_;
  int n_users_;
  std::vector<int> widths_;
  std::vector<DecodeEntry> entries_;
  std::map<std::pair<std::size_t, int>, std::string> index_;
};

/// Runs the oracle. GHZ order is (senders, server, receiver); in partial
/// mode the GHZ measurement covers (senders, receiver) and the server's
/// qubit is measured in X, in full mode (senders, server) and the
/// receiver's qubit. Throws DecodeCollision when the framing is ambiguous.
DecodeTable build_decode_table(Mode mode, int n_users, const std::vector<int>& widths);

/// Memoized table for the standard framing. Thread-safe.
const DecodeTable& decode_table(Mode mode, int n_users);

/// Throws TamperingDetected for pairs outside the table.
std::string decode_symbol(Mode mode, const qcore::GhzOutcome& ghz, qcore::XOutcome pub,
                          int n_users);

}  // namespace qsdc::comms
