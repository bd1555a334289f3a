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

// Interception of one sender's GHZ qubit in flight. With the attacker's
// qubit A starting in |0>:
//   |0>_u -> alpha |0>_u |e00>_A + beta |1>_u |e01>_A
//   |1>_u -> beta' |0>_u |e10>_A + alpha' |1>_u |e11>_A
// A is then measured in Z and the outcome used to guess the sender's
// Pauli (0 -> I, 1 -> X).

#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "qsdc/comms/channel.h"
#include "qsdc/comms/transcript.h"
#include "qsdc/qcore/rng.h"

namespace qsdc::adversary {

struct InterceptParams {
  qcore::Complex alpha{1.0, 0.0};
  qcore::Complex beta{0.0, 0.0};
  qcore::Complex alpha_p{1.0, 0.0};
  qcore::Complex beta_p{0.0, 0.0};
  Eigen::Vector2cd eps00{1.0, 0.0};
  Eigen::Vector2cd eps01{1.0, 0.0};
  Eigen::Vector2cd eps10{1.0, 0.0};
  Eigen::Vector2cd eps11{1.0, 0.0};

  /// Throws std::invalid_argument unless both amplitude pairs and all four
  /// ancilla states are normalized and the two images are orthogonal.
  void validate() const;

  /// Images of |0>_u and |1>_u as vectors over |u A>.
  Eigen::Vector4cd image0() const;
  Eigen::Vector4cd image1() const;

  /// Product ancilla; no effect on u.
  static InterceptParams trivial();
  /// alpha = alpha' = 1 up to random phases, beta = beta' = 0 and random
  /// orthogonal e00, e11: A records u in a random basis.
  static InterceptParams z_monitor(qcore::Rng& rng);
  /// Images taken from a Haar-random two-qubit unitary.
  static InterceptParams haar(qcore::Rng& rng);
};

/// Exact symbol error probability at the receiver when one sender's qubit
/// is intercepted: 1 - |alpha e00 + alpha' e11|^2 / 4.
double intercept_disturbance(const InterceptParams& p);

class InterceptTap : public comms::AttackModel {
 public:
  explicit InterceptTap(const InterceptParams& params);

  std::string name() const override { return "intercept"; }
  void on_transit(qcore::StateRegister& reg, qcore::QubitId in_flight, comms::Direction dir,
                  comms::TapContext& ctx) override;

  /// One guess per intercepted qubit, in transit order.
  const std::vector<qcore::PauliOp>& guesses() const { return guesses_; }
  const InterceptParams& params() const { return params_; }

 private:
  InterceptParams params_;
  Eigen::Matrix4cd unitary_;
  std::vector<qcore::PauliOp> guesses_;
};

std::shared_ptr<InterceptTap> intercept_tap(const InterceptParams& params);

/// Fraction of symbols where the tap's guess equals the operation of
/// sender `sender_slot` (0 for u1).
double guess_accuracy(const InterceptTap& tap, const comms::Transcript& transcript,
                      std::size_t sender_slot);

}  // namespace qsdc::adversary
