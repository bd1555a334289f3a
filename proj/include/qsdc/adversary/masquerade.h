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

// Masquerade attack: the attacker takes the in-flight u particle, adjoins
// an ancilla a in |0> and applies
//   |0>_u -> a0|00> + b0|01> + g0|10> + d0|11>
//   |1>_u -> a1|00> + b1|01> + g1|10> + d1|11>     (over u a),
// then returns a to the server in place of the user's n.

#pragma once

#include <array>
#include <memory>

#include <Eigen/Dense>

#include "qsdc/auth/auth.h"
#include "qsdc/comms/channel.h"
#include "qsdc/qcore/rng.h"

namespace qsdc::adversary {

struct MasqueradeParams {
  /// (alpha, beta, gamma, delta) for input |0>_u and |1>_u.
  std::array<qcore::Complex, 4> row0{1.0, 0.0, 0.0, 0.0};
  std::array<qcore::Complex, 4> row1{0.0, 0.0, 0.0, 1.0};

  /// Throws std::invalid_argument unless both rows are unit vectors and
  /// mutually orthogonal (otherwise no unitary realizes the map).
  void validate() const;

  /// Rows taken from a Haar-random two-qubit unitary.
  static MasqueradeParams random(qcore::Rng& rng);
  /// alpha0 = delta1 = 1: a copies u in the Z basis.
  static MasqueradeParams identity_like();
  /// gamma0 = beta1 = 1.
  static MasqueradeParams swap_like();
};

/// Exact rejection probability for one key pair.
///   00: (|a1|^2 + |g1|^2 + |b0|^2 + |d0|^2) / 2
///   01: (|a0|^2 + |g0|^2 + |b1|^2 + |d1|^2) / 2
///   11: (|b0+b1|^2 + |d0+d1|^2 + |a0-a1|^2 + |g0-g1|^2) / 4
///   10: 1 - P11
double masquerade_detection(const MasqueradeParams& p, auth::KeyPair key);

/// Mean over the four key pairs; 1/2 for every valid parameter set.
double masquerade_detection_total(const MasqueradeParams& p);

/// Rejection probability claimed for pairs whose first bit is 1: P10 is
/// taken equal to P01 and P11 to P00.
double masquerade_detection_claimed(const MasqueradeParams& p, auth::KeyPair key);

class MasqueradeTap : public comms::AttackModel {
 public:
  explicit MasqueradeTap(const MasqueradeParams& params);

  std::string name() const override { return "masquerade"; }
  std::optional<qcore::QubitId> impersonate(qcore::StateRegister& reg, qcore::QubitId received,
                                            comms::TapContext& ctx) override;

  const MasqueradeParams& params() const { return params_; }

 private:
  MasqueradeParams params_;
  Eigen::Matrix4cd unitary_;
};

std::shared_ptr<MasqueradeTap> masquerade_tap(const MasqueradeParams& params);

}  // namespace qsdc::adversary
