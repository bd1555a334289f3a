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

#include <complex>
#include <compare>
#include <cstdint>
#include <string>

namespace qsdc::qcore {

using Complex = std::complex<double>;

/// Absolute tolerance for every floating comparison on amplitudes and
/// probabilities.
inline constexpr double kTolerance = 1e-9;

enum class Role : std::uint8_t { kServer, kUser, kAttacker };

/// A protocol participant. Users are numbered from 1.
struct PartyId {
  Role role = Role::kServer;
  std::uint16_t index = 0;

  static constexpr PartyId server() { return {Role::kServer, 0}; }
  static constexpr PartyId user(int k) { return {Role::kUser, static_cast<std::uint16_t>(k)}; }
  static constexpr PartyId attacker(int k = 0) {
    return {Role::kAttacker, static_cast<std::uint16_t>(k)};
  }

  /// "server", "u3", "eve".
  std::string name() const;

  friend auto operator<=>(const PartyId&, const PartyId&) = default;
};

/// Labels one qubit in a session. `index` is unique within the session;
/// `owner` is the party that created the qubit.
struct QubitId {
  PartyId owner;
  std::uint32_t index = 0;

  std::string name() const;

  friend auto operator<=>(const QubitId&, const QubitId&) = default;
};

/// Hands out session-unique qubit labels.
class QubitAllocator {
 public:
  QubitId allocate(PartyId owner) { return QubitId{owner, next_++}; }
  std::uint32_t issued() const { return next_; }

 private:
  std::uint32_t next_ = 0;
};

/// The dense-coding alphabet. Y is the real antisymmetric matrix
/// |0><1| - |1><0|, i.e. i*sigma_y.
enum class PauliOp : std::uint8_t { kI, kX, kY, kZ };

/// C0 = |0><0| (x) I + |1><1| (x) X;  C1 = |+><+| (x) I + |-><-| (x) X.
enum class ControlledOp : std::uint8_t { kC0, kC1 };

enum class BellOutcome : std::uint8_t { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

enum class XOutcome : std::uint8_t { kPlus, kMinus };

/// Result of a projective measurement in the N-qubit GHZ basis
/// (|x> +/- |~x>)/sqrt(2), x[0] = 0. `pattern` stores x with the first
/// measured qubit as the most significant of `num_qubits` bits, so the top
/// bit is always clear.
struct GhzOutcome {
  int num_qubits = 0;
  std::uint32_t pattern = 0;
  bool minus = false;

  /// Glyph name for 2 and 3 qubits ("Phi+", "psi-", "varphi+", ...),
  /// otherwise "GHZ[0110]-".
  std::string name() const;

  friend bool operator==(const GhzOutcome&, const GhzOutcome&) = default;
  friend auto operator<=>(const GhzOutcome&, const GhzOutcome&) = default;
};

std::string to_string(PauliOp op);
std::string to_string(ControlledOp op);
std::string to_string(BellOutcome b);
std::string to_string(XOutcome x);

/// Two-qubit GHZ outcomes are Bell outcomes: pattern 00 -> Phi, 01 -> psi.
BellOutcome to_bell(const GhzOutcome& g);
GhzOutcome from_bell(BellOutcome b);

/// Parses the names produced by GhzOutcome::name() for 2 or 3 qubits.
GhzOutcome parse_ghz_outcome(const std::string& name, int num_qubits);

}  // namespace qsdc::qcore
