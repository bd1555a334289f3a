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

// One-way substitution: the attacker only sees the returning n particle.

#pragma once

#include <array>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "qsdc/comms/channel.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::adversary {

struct HolevoReport {
  /// Honest (q, u, n) states just before n leaves the user, by key value.
  std::array<qcore::StateRegister, 4> states;
  /// Fidelity of each state with its closed form.
  std::array<double, 4> closed_form_fidelity{};
  /// Reduced states of n per key and their uniform mixture.
  std::array<Eigen::MatrixXcd, 4> rho_ni;
  Eigen::MatrixXcd rho_n;
  /// S(rho_n) - sum_i S(rho_ni) / 4 in bits.
  double chi = 0.0;
};

/// Builds the four returned states by running the user's side of a round
/// and evaluates the Holevo quantity of n.
HolevoReport holevo_one_way();

/// Copies n into a fresh ancilla (CNOT n -> ancilla) on the backward leg.
class OneWayTap : public comms::AttackModel {
 public:
  std::string name() const override { return "oneway"; }
  void on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight, comms::Direction dir,
                  comms::TapContext& ctx) override;

  const std::vector<qcore::QubitId>& ancillas() const { return ancillas_; }

 private:
  std::vector<qcore::QubitId> ancillas_;
};

std::shared_ptr<OneWayTap> one_way_tap();

}  // namespace qsdc::adversary
