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

#include "qsdc/adversary/two_way.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsdc/qcore/gates.h"

namespace qsdc::adversary {

TwoWayTap::TwoWayTap(double theta) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("theta must lie in [0, pi]");
  }
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  gate_ = Eigen::Matrix4cd::Identity();
  gate_(2, 2) = c;
  gate_(2, 3) = -s;
  gate_(3, 2) = s;
  gate_(3, 3) = c;
}

void TwoWayTap::on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight,
                           comms::Direction dir, comms::TapContext& ctx) {
  const qcore::QubitId probe = ctx.ids.allocate(qcore::PartyId::attacker());
  reg = qcore::compose(reg, qcore::StateRegister::computational({probe}, 0));
  qcore::apply_two(reg, in_flight, probe, gate_);
  probes_.push_back(probe);
  ctx.transcript.append(
      "eve", dir == comms::Direction::kForward ? "probe_forward" : "probe_backward",
      ctx.transcript.recording() ? comms::Json{{"qubit", in_flight.index}, {"probe", probe.index}}
                                 : comms::Json::object());
}

std::shared_ptr<TwoWayTap> two_way_tap(double theta) { return std::make_shared<TwoWayTap>(theta); }

}  // namespace qsdc::adversary
