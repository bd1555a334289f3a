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

#include "qsdc/comms/transmission.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qsdc/comms/decode_table.h"
#include "qsdc/comms/message.h"
#include "qsdc/ghzfab/ghzfab.h"
#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"

namespace qsdc::comms {
namespace {

std::string random_bits(std::size_t n, qcore::Rng& rng) {
  std::string s(n, '0');
  for (auto& c : s) c = rng.bit() ? '1' : '0';
  return s;
}

// Partial Fisher-Yates: `k` distinct indices from [0, n), sorted.
std::vector<std::size_t> choose(std::size_t n, std::size_t k, qcore::Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

std::size_t decoy_count(std::size_t data_symbols, double fraction) {
  if (fraction < 0.0 || fraction > 1.0) throw std::invalid_argument("fraction must lie in [0, 1]");
  return static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(data_symbols) - 1e-12));
}

std::size_t pairs_needed(std::size_t bits, int n_users, double decoy_fraction) {
  const std::size_t w = static_cast<std::size_t>(symbol_width(n_users));
  const std::size_t data = (bits + w - 1) / w;
  return data + decoy_count(data, decoy_fraction);
}

TransmissionResult send_message(Session& session, const std::string& bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("message must be a bit string");
  }
  const int n = session.n_users();
  const Mode mode = session.mode();
  qcore::Rng& rng = session.rng();
  Transcript& log = session.transcript();
  const bool rec = log.recording();

  std::size_t pad_len = 0;
  const auto data = frame_message(bits, symbol_width(n), pad_len);
  log.header().pad_len = pad_len;
  const std::size_t decoys = decoy_count(data.size(), session.config().decoy_fraction);
  const std::size_t total = data.size() + decoys;
  const auto decoy_slots = choose(total, decoys, rng);

  std::vector<qcore::PartyId> parties = session.senders();
  parties.push_back(session.receiver());
  const std::vector<int> widths = sender_widths(n);
  const qcore::PartyId measurer = session.measurer();
  const qcore::PartyId other = mode == Mode::kPartial ? session.server() : session.receiver();

  TransmissionResult result;
  result.sent = bits;
  result.data_symbols = data.size();
  result.decoy_symbols = decoys;
  std::string decoded;
  std::size_t next_data = 0;
  std::size_t next_decoy = 0;

  for (std::size_t s = 0; s < total; ++s) {
    SymbolRecord record;
    record.index = s;
    record.decoy = next_decoy < decoy_slots.size() && decoy_slots[next_decoy] == s;
    if (record.decoy) {
      ++next_decoy;
      record.sent = random_bits(static_cast<std::size_t>(symbol_width(n)), rng);
    } else {
      record.sent = data[next_data++];
    }
    record.ops = encode_symbol(record.sent, widths);

    ghzfab::GhzAllocation alloc = ghzfab::allocate_ghz(session, parties, rng);
    qcore::StateRegister& reg = alloc.reg;
    const auto senders = session.senders();
    for (std::size_t k = 0; k < senders.size(); ++k) {
      const qcore::QubitId q = alloc.of(senders[k]);
      qcore::apply_pauli(reg, q, record.ops[k]);
      log.append(senders[k].name(), "encode", rec ? Json{{"symbol", s}} : Json::object());
      session.uplink(static_cast<int>(k) + 1).send_qubit(reg, q, senders[k], rng);
    }

    std::vector<qcore::QubitId> measured;
    for (const auto& p : senders) measured.push_back(alloc.of(p));
    measured.push_back(alloc.of(measurer));
    record.measurement = qcore::measure_ghz(reg, measured, rng);
    log.append(measurer.name(), "measure_ghz",
               rec ? Json{{"symbol", s}, {"outcome", record.measurement.name()}} : Json::object());

    record.publication = qcore::measure_x(reg, alloc.of(other), rng);
    session.server_link().publish(
        other, "publish_x",
        rec ? Json{{"symbol", s}, {"outcome", qcore::to_string(record.publication)}}
            : Json::object());
    if (mode == Mode::kFull) {
      session.server_link().publish(
          session.server(), "announce_ghz",
          rec ? Json{{"symbol", s}, {"outcome", record.measurement.name()}} : Json::object());
    }

    const auto bits_out = decode_table(mode, n).lookup(record.measurement, record.publication);
    if (bits_out) {
      record.decoded = *bits_out;
    } else {
      record.alarm = true;
      record.decoded = std::string(static_cast<std::size_t>(symbol_width(n)), '?');
      ++result.alarms;
    }
    log.append(session.receiver().name(), record.alarm ? "tampering_alarm" : "decode",
               rec ? Json{{"symbol", s}, {"bits", record.decoded}} : Json::object());
    if (!record.decoy) decoded += record.decoded;
    log.symbols().push_back(std::move(record));
  }

  decoded.resize(decoded.size() - pad_len);
  result.decoded = decoded;
  log.final_bits()[session.receiver().name()] = decoded;
  return result;
}

EavesdropReport eavesdrop_check(Transcript& transcript, double sample_fraction, double threshold,
                                qcore::Rng& rng) {
  if (sample_fraction < 0.0 || sample_fraction > 1.0) {
    throw std::invalid_argument("sample fraction must lie in [0, 1]");
  }
  const auto& symbols = transcript.symbols();
  std::vector<std::size_t> pool;
  for (const SymbolRecord& r : symbols) {
    if (r.decoy) pool.push_back(r.index);
  }
  if (pool.empty()) {
    for (const SymbolRecord& r : symbols) pool.push_back(r.index);
  }

  EavesdropReport report;
  if (!pool.empty()) {
    std::size_t k = static_cast<std::size_t>(std::ceil(sample_fraction * pool.size() - 1e-12));
    k = std::clamp<std::size_t>(k, 1, pool.size());
    for (std::size_t pick : choose(pool.size(), k, rng)) {
      const SymbolRecord& r = symbols[pool[pick]];
      ++report.sampled;
      if (r.alarm || r.decoded != r.sent) ++report.errors;
    }
    report.error_rate = static_cast<double>(report.errors) / static_cast<double>(report.sampled);
  }
  report.terminated = report.error_rate > threshold;
  transcript.append("u" + std::to_string(transcript.header().n_users), "eavesdrop_check",
                    Json{{"sampled", report.sampled},
                         {"errors", report.errors},
                         {"error_rate", report.error_rate},
                         {"verdict", report.terminated ? "terminated" : "pass"}});
  return report;
}

}  // namespace qsdc::comms
