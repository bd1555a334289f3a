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

#include "qsdc/comms/decode_table.h"

#include <algorithm>
#include <memory>
#include <mutex>

#include "qsdc/comms/message.h"
#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::comms {
namespace {

constexpr double kSupport = 1e-12;

std::string to_bits(std::size_t v, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t k = 0; k < width; ++k) {
    if ((v >> (width - 1 - k)) & 1U) s[k] = '1';
  }
  return s;
}

}  // namespace

DecodeTable::DecodeTable(Mode mode, int n_users, std::vector<int> widths,
                         std::vector<DecodeEntry> entries)
    : mode_(mode), n_users_(n_users), widths_(std::move(widths)), entries_(std::move(entries)) {
  for (const DecodeEntry& e : entries_) {
    const auto key = std::make_pair(qcore::ghz_index(e.ghz), static_cast<int>(e.pub));
    auto [it, inserted] = index_.emplace(key, e.bits);
    if (!inserted && it->second != e.bits) {
      throw DecodeCollision("symbols " + it->second + " and " + e.bits + " both yield (" +
                            e.ghz.name() + ", " + qcore::to_string(e.pub) + ")");
    }
  }
}

std::optional<std::string> DecodeTable::lookup(const qcore::GhzOutcome& ghz,
                                               qcore::XOutcome pub) const {
  if (ghz.num_qubits != n_users_) return std::nullopt;
  auto it = index_.find({qcore::ghz_index(ghz), static_cast<int>(pub)});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

DecodeTable build_decode_table(Mode mode, int n_users, const std::vector<int>& widths) {
  if (n_users < 2) throw std::invalid_argument("decode table needs at least two users");
  if (widths.size() != static_cast<std::size_t>(n_users - 1)) {
    throw std::invalid_argument("one width per sender expected");
  }
  std::size_t width = 0;
  for (int w : widths) width += static_cast<std::size_t>(w);

  qcore::QubitAllocator ids;
  std::vector<qcore::QubitId> senders;
  for (int k = 1; k < n_users; ++k) senders.push_back(ids.allocate(qcore::PartyId::user(k)));
  const qcore::QubitId server = ids.allocate(qcore::PartyId::server());
  const qcore::QubitId receiver = ids.allocate(qcore::PartyId::user(n_users));

  std::vector<qcore::QubitId> all = senders;
  all.push_back(server);
  all.push_back(receiver);
  std::vector<qcore::QubitId> measured = senders;
  measured.push_back(mode == Mode::kPartial ? receiver : server);
  const qcore::QubitId other = mode == Mode::kPartial ? server : receiver;
  measured.push_back(other);

  const auto basis =
      qcore::MeasurementBasis::product(qcore::MeasurementBasis::ghz(n_users), qcore::MeasurementBasis::x());
  const qcore::StateRegister ghz = qcore::make_ghz(all);

  std::vector<DecodeEntry> entries;
  for (std::size_t v = 0; v < (std::size_t{1} << width); ++v) {
    const std::string bits = to_bits(v, width);
    const auto ops = encode_symbol(bits, widths);
    qcore::StateRegister reg = ghz;
    for (std::size_t k = 0; k < ops.size(); ++k) qcore::apply_pauli(reg, senders[k], ops[k]);
    const auto probs = qcore::outcome_probabilities(reg, measured, basis);
    for (std::size_t o = 0; o < probs.size(); ++o) {
      if (probs[o] < kSupport) continue;
      entries.push_back(DecodeEntry{bits, ops, qcore::ghz_outcome_from_index(n_users, o / 2),
                                    static_cast<qcore::XOutcome>(o % 2), probs[o]});
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const DecodeEntry& a, const DecodeEntry& b) {
    if (a.pub != b.pub) return a.pub < b.pub;
    if (a.bits != b.bits) return a.bits < b.bits;
    return qcore::ghz_index(a.ghz) < qcore::ghz_index(b.ghz);
  });
  return DecodeTable(mode, n_users, widths, std::move(entries));
}

const DecodeTable& decode_table(Mode mode, int n_users) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<DecodeTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{static_cast<int>(mode), n_users}];
  if (!slot) {
    slot = std::make_unique<DecodeTable>(build_decode_table(mode, n_users, sender_widths(n_users)));
  }
  return *slot;
}

std::string decode_symbol(Mode mode, const qcore::GhzOutcome& ghz, qcore::XOutcome pub,
                          int n_users) {
  if (auto bits = decode_table(mode, n_users).lookup(ghz, pub)) return *bits;
  throw TamperingDetected("no symbol yields (" + ghz.name() + ", " + qcore::to_string(pub) +
                          ") in " + to_string(mode) + " mode with " + std::to_string(n_users) +
                          " users");
}

}  // namespace qsdc::comms
