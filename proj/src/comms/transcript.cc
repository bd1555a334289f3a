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

#include "qsdc/comms/transcript.h"

#include <stdexcept>

namespace qsdc::comms {

std::string to_string(Mode m) { return m == Mode::kPartial ? "partial" : "full"; }

Mode parse_mode(const std::string& s) {
  if (s == "partial") return Mode::kPartial;
  if (s == "full") return Mode::kFull;
  throw std::invalid_argument("unknown mode '" + s + "' (expected partial or full)");
}

std::uint64_t Transcript::append(std::string actor, std::string action, Json payload) {
  const std::uint64_t seq = next_seq_++;
  if (recording_) {
    events_.push_back(Event{seq, std::move(actor), std::move(action), std::move(payload)});
  }
  return seq;
}

Json Transcript::to_json() const {
  Json out = Json::object();
  Json header = Json::object();
  header["n_users"] = header_.n_users;
  header["mode"] = header_.mode;
  header["seed"] = header_.seed;
  header["pad_len"] = header_.pad_len;
  out["header"] = std::move(header);
  Json events = Json::array();
  for (const Event& e : events_) {
    Json j = Json::object();
    j["seq"] = e.seq;
    j["actor"] = e.actor;
    j["action"] = e.action;
    j["payload"] = e.payload;
    events.push_back(std::move(j));
  }
  out["events"] = std::move(events);
  Json fin = Json::object();
  for (const auto& [who, bits] : final_) fin[who] = bits;
  out["final"] = std::move(fin);
  return out;
}

}  // namespace qsdc::comms
