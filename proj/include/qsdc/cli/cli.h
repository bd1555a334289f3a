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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsdc/comms/transcript.h"
#include "qsdc/comms/transmission.h"

namespace qsdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAlarm = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Attack : std::uint8_t { kNone, kMasquerade, kOneWay, kTwoWay, kIntercept };

std::string to_string(Attack a);
/// Throws UsageError for unknown names.
Attack parse_attack(const std::string& s);

struct RunConfig {
  int n_users = 2;
  comms::Mode mode = comms::Mode::kPartial;
  /// Bit string; empty means one random symbol per trial.
  std::string message;
  Attack attack = Attack::kNone;
  double theta_eps = 1.5707963267948966;
  /// "zmonitor" or "haar".
  std::string intercept_family = "zmonitor";
  std::optional<std::uint64_t> seed;
  std::size_t trials = 1;
  double threshold = 0.05;
  std::size_t auth_rounds = 64;
  double decoy_fraction = 0.1;
  double sample_fraction = 1.0;
  std::string out;
};

/// Throws UsageError when the configuration cannot run.
void validate(const RunConfig& config);

struct TrialOutcome {
  bool auth_terminated = false;
  /// Error rate of the attacked user's handshake (u1).
  double auth_error_rate = 0.0;
  /// Retained pairs unusable for GHZ fabrication.
  bool fabrication_fault = false;
  std::string sent;
  std::string decoded;
  std::size_t symbols = 0;
  std::size_t symbol_errors = 0;
  std::size_t alarms = 0;
  comms::EavesdropReport check;
  /// Attacker's Pauli-guess hits (intercept only).
  std::size_t guesses = 0;
  std::size_t guess_hits = 0;

  bool alarm() const {
    return auth_terminated || fabrication_fault || alarms > 0 || check.terminated;
  }
};

/// One full session: authenticate, transmit, check. When `transcript` is
/// non-null the session records events into it.
TrialOutcome run_trial(const RunConfig& config, std::uint64_t seed,
                       comms::Transcript* transcript);

/// Binomial mean and 3-sigma half width.
struct Estimate {
  std::size_t count = 0;
  double mean = 0.0;
  double three_sigma = 0.0;
};
Estimate binomial_estimate(std::size_t hits, std::size_t count);

/// Entry point shared by the executable and the tests.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsdc::cli
