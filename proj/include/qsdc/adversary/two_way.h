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

// A representative two-way substitution attack: on the way to the user the
// attacker rotates a probe e by Ry(theta) controlled on u; on the way back
// a second probe h by Ry(theta) controlled on n. Used for qualitative
// checks only; the closed forms live in closed_form.h.

#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "qsdc/comms/channel.h"

namespace qsdc::adversary {

class TwoWayTap : public comms::AttackModel {
 public:
  /// theta in [0, pi].
  explicit TwoWayTap(double theta);

  std::string name() const override { return "twoway"; }
  void on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight, comms::Direction dir,
                  comms::TapContext& ctx) override;

  double theta() const { return theta_; }
  const std::vector<qcore::QubitId>& probes() const { return probes_; }

 private:
  double theta_;
  Eigen::Matrix4cd gate_;
  std::vector<qcore::QubitId> probes_;
};

std::shared_ptr<TwoWayTap> two_way_tap(double theta);

}  // namespace qsdc::adversary
