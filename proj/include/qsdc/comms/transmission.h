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

#include <string>

#include "qsdc/comms/session.h"

namespace qsdc::comms {

struct TransmissionResult {
  std::string sent;
  /// Receiver's reconstruction of the data symbols, padding removed.
  std::string decoded;
  std::size_t data_symbols = 0;
  std::size_t decoy_symbols = 0;
  /// Symbols whose (measurement, publication) pair decoded to nothing.
  std::size_t alarms = 0;
};

/// Decoys reserved for `data_symbols` at the given fraction (rounded up).
std::size_t decoy_count(std::size_t data_symbols, double fraction);

/// Retained pairs each user needs to carry `bits` in a session.
std::size_t pairs_needed(std::size_t bits, int n_users, double decoy_fraction);

/// Sends `bits` from the senders to the receiver. Every symbol uses a fresh
/// GHZ allocation; decoy symbols carrying random bits are interleaved at
/// random positions. Symbol records and the final bits go to the
/// session transcript. Requires an authenticated session with enough
/// retained pairs (ghzfab::FabricationError otherwise).
TransmissionResult send_message(Session& session, const std::string& bits);

struct EavesdropReport {
  std::size_t sampled = 0;
  std::size_t errors = 0;
  double error_rate = 0.0;
  bool terminated = false;
};

/// Senders reveal a random sample of positions and operations; the
/// receiver compares them with what it decoded. Samples decoys when any
/// exist, otherwise all symbols. Terminated iff the error rate exceeds
/// `threshold`.
EavesdropReport eavesdrop_check(Transcript& transcript, double sample_fraction, double threshold,
                                qcore::Rng& rng);

}  // namespace qsdc::comms
