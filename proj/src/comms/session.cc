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

#include "qsdc/comms/session.h"

#include <stdexcept>

namespace qsdc::comms {

Session::Session(SessionConfig config) : config_(config), rng_(config.seed) {
  if (config_.n_users < 2) throw std::invalid_argument("a session needs at least two users");
  if (config_.decoy_fraction < 0.0 || config_.decoy_fraction > 1.0) {
    throw std::invalid_argument("decoy fraction must lie in [0, 1]");
  }
  transcript_.header() =
      TranscriptHeader{config_.n_users, to_string(config_.mode), config_.seed, 0};

  const int n = config_.n_users;
  users_.resize(static_cast<std::size_t>(n));
  server_link_ = std::make_unique<Channel>(server(), receiver(), ChannelKind::kClassical,
                                           transcript_, ids_);
  for (int k = 1; k <= n; ++k) {
    UserState& st = users_[k - 1];
    st.auth_channel =
        std::make_unique<Channel>(server(), user(k), ChannelKind::kQuantum, transcript_, ids_);
    if (k < n) {
      st.uplink = std::make_unique<Channel>(user(k), measurer(), ChannelKind::kQuantum,
                                            transcript_, ids_);
      st.reveal_link = std::make_unique<Channel>(user(k), receiver(), ChannelKind::kClassical,
                                                 transcript_, ids_);
    }
  }
}

qcore::PartyId Session::user(int k) const {
  if (k < 1 || k > config_.n_users) {
    throw std::out_of_range("no user u" + std::to_string(k) + " in this session");
  }
  return qcore::PartyId::user(k);
}

std::vector<qcore::PartyId> Session::senders() const {
  std::vector<qcore::PartyId> out;
  for (int k = 1; k < config_.n_users; ++k) out.push_back(user(k));
  return out;
}

qcore::PartyId Session::measurer() const {
  return config_.mode == Mode::kPartial ? receiver() : server();
}

Session::UserState& Session::state(int k) {
  user(k);
  return users_[k - 1];
}

const Session::UserState& Session::state(int k) const {
  user(k);
  return users_[k - 1];
}

Channel& Session::auth_channel(int k) { return *state(k).auth_channel; }

Channel& Session::uplink(int k) {
  UserState& st = state(k);
  if (!st.uplink) throw std::out_of_range("u" + std::to_string(k) + " is not a sender");
  return *st.uplink;
}

Channel& Session::server_link() { return *server_link_; }

Channel& Session::reveal_link(int k) {
  UserState& st = state(k);
  if (!st.reveal_link) throw std::out_of_range("u" + std::to_string(k) + " is not a sender");
  return *st.reveal_link;
}

const auth::AuthResult& Session::authenticate(int k) {
  UserState& st = state(k);
  auth::AuthKey key = auth::AuthKey::random(config_.auth_rounds, rng_);
  st.auth = auth::authenticate_user(key, config_.auth_rounds, config_.auth_threshold,
                                    *st.auth_channel, rng_);
  st.stock.clear();
  for (auth::RetainedPair& p : st.auth->pairs) st.stock.push_back(std::move(p));
  st.auth->pairs.clear();
  if (st.auth->verdict == auth::Verdict::kTerminated) st.auth_channel->close();
  return *st.auth;
}

void Session::authenticate_all() {
  for (int k = 1; k <= config_.n_users; ++k) authenticate(k);
}

bool Session::authenticated(int k) const {
  const UserState& st = state(k);
  return st.auth && st.auth->verdict == auth::Verdict::kAuthenticated;
}

bool Session::any_terminated() const {
  for (const UserState& st : users_) {
    if (st.auth && st.auth->verdict == auth::Verdict::kTerminated) return true;
  }
  return false;
}

const auth::AuthResult* Session::auth_result(int k) const {
  const UserState& st = state(k);
  return st.auth ? &*st.auth : nullptr;
}

std::deque<auth::RetainedPair>& Session::epr_stock(int k) { return state(k).stock; }

}  // namespace qsdc::comms
