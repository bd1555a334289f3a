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

// Closed forms for the two-way substitution attack. theta is the
// attacker's rotation angle in [0, pi]; `total` is the minimum detection
// probability (1 - cos theta) / 4 in [0, 1/2].

#pragma once

namespace qsdc::adversary {

/// (1 - cos theta) / 4. Throws std::invalid_argument outside [0, pi].
double two_way_detection(double theta);

/// sqrt(8 T - 16 T^2), i.e. sin theta for the theta giving detection T.
double sin_theta_from_total(double total);

/// 1/4 [(1+s) log2(1+s) + (1-s) log2(1-s)] with s = sin theta(total),
/// 0 log 0 = 0. Throws outside [0, 1/2].
double two_way_joint_info(double total);

/// Key estimation probability (sin theta (3P - 1) + 2) / 8.
double estimation_prob(double theta, double p);

/// The unsimplified estimation probability
/// (1+s)/2 [P/2 + (1-P)/4] + (1-s)/2 [(1-P)/4], which reduces to
/// (1 + sP) / 4. It agrees with estimation_prob() only when P = 1 or
/// sin theta = 0; the gap is sin theta (1 - P) / 8.
double estimation_prob_unsimplified(double theta, double p);

/// (sqrt(8 T - 16 T^2) + 1) / 4. Throws outside [0, 1/2].
double p_e_max(double total);

/// [p_e_m (1 - T)]^(n/2). Throws for odd n, n < 2, or factors outside [0, 1].
double p_e_retrieve(double p_e_m, double total, int n);

/// p_e_retrieve with p_e_m = p_e_max(total).
double p_e_retrieve_chain(double total, int n);

}  // namespace qsdc::adversary
