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

#include "qsdc/qcore/types.h"

#include <array>
#include <stdexcept>

namespace qsdc::qcore {
namespace {

// Three-qubit glyphs indexed by pattern: 000 Psi, 001 varphi, 010 phi, 011 psi.
constexpr std::array<const char*, 4> kGhz3Glyphs = {"Psi", "varphi", "phi", "psi"};
constexpr std::array<const char*, 2> kGhz2Glyphs = {"Phi", "psi"};

}  // namespace

std::string PartyId::name() const {
  switch (role) {
    case Role::kServer:
      return "server";
    case Role::kUser:
      return "u" + std::to_string(index);
    case Role::kAttacker:
      return index == 0 ? std::string("eve") : "eve" + std::to_string(index);
  }
  return "?";
}

std::string QubitId::name() const { return owner.name() + "#" + std::to_string(index); }

std::string GhzOutcome::name() const {
  const char sign = minus ? '-' : '+';
  if (num_qubits == 2 && pattern < kGhz2Glyphs.size()) {
    return std::string(kGhz2Glyphs[pattern]) + sign;
  }
  if (num_qubits == 3 && pattern < kGhz3Glyphs.size()) {
    return std::string(kGhz3Glyphs[pattern]) + sign;
  }
  std::string bits;
  for (int k = num_qubits - 1; k >= 0; --k) bits.push_back(((pattern >> k) & 1U) ? '1' : '0');
  return "GHZ[" + bits + "]" + sign;
}

std::string to_string(PauliOp op) {
  switch (op) {
    case PauliOp::kI:
      return "I";
    case PauliOp::kX:
      return "X";
    case PauliOp::kY:
      return "Y";
    case PauliOp::kZ:
      return "Z";
  }
  return "?";
}

std::string to_string(ControlledOp op) { return op == ControlledOp::kC0 ? "C0" : "C1"; }

std::string to_string(BellOutcome b) {
  switch (b) {
    case BellOutcome::kPhiPlus:
      return "Phi+";
    case BellOutcome::kPhiMinus:
      return "Phi-";
    case BellOutcome::kPsiPlus:
      return "psi+";
    case BellOutcome::kPsiMinus:
      return "psi-";
  }
  return "?";
}

std::string to_string(XOutcome x) { return x == XOutcome::kPlus ? "+" : "-"; }

BellOutcome to_bell(const GhzOutcome& g) {
  if (g.num_qubits != 2 || g.pattern > 1) {
    throw std::invalid_argument("to_bell: not a two-qubit GHZ outcome: " + g.name());
  }
  if (g.pattern == 0) return g.minus ? BellOutcome::kPhiMinus : BellOutcome::kPhiPlus;
  return g.minus ? BellOutcome::kPsiMinus : BellOutcome::kPsiPlus;
}

GhzOutcome from_bell(BellOutcome b) {
  switch (b) {
    case BellOutcome::kPhiPlus:
      return {2, 0, false};
    case BellOutcome::kPhiMinus:
      return {2, 0, true};
    case BellOutcome::kPsiPlus:
      return {2, 1, false};
    case BellOutcome::kPsiMinus:
      return {2, 1, true};
  }
  return {};
}

GhzOutcome parse_ghz_outcome(const std::string& name, int num_qubits) {
  if (name.size() < 2 || (name.back() != '+' && name.back() != '-')) {
    throw std::invalid_argument("parse_ghz_outcome: missing sign in '" + name + "'");
  }
  const std::string glyph = name.substr(0, name.size() - 1);
  const bool minus = name.back() == '-';
  if (num_qubits == 2) {
    for (std::uint32_t p = 0; p < kGhz2Glyphs.size(); ++p) {
      if (glyph == kGhz2Glyphs[p]) return {2, p, minus};
    }
  } else if (num_qubits == 3) {
    for (std::uint32_t p = 0; p < kGhz3Glyphs.size(); ++p) {
      if (glyph == kGhz3Glyphs[p]) return {3, p, minus};
    }
  }
  throw std::invalid_argument("parse_ghz_outcome: unknown glyph '" + name + "'");
}

}  // namespace qsdc::qcore
