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

#include "qsdc/adversary/closed_form.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsdc::adversary {
namespace {

void require_total(double total) {
  if (!(total >= 0.0 && total <= 0.5)) {
    throw std::invalid_argument("Total must lie in [0, 0.5], got " + std::to_string(total));
  }
}

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("theta must lie in [0, pi], got " + std::to_string(theta));
  }
}

void require_unit(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

}  // namespace

double two_way_detection(double theta) {
  require_theta(theta);
  return (1.0 - std::cos(theta)) / 4.0;
}

double sin_theta_from_total(double total) {
  require_total(total);
  return std::sqrt(std::max(0.0, 8.0 * total - 16.0 * total * total));
}

double two_way_joint_info(double total) {
  const double s = sin_theta_from_total(total);
  return 0.25 * (xlog2x(1.0 + s) + xlog2x(1.0 - s));
}

double estimation_prob(double theta, double p) {
  require_theta(theta);
  require_unit(p, "P");
  return (std::sin(theta) * (3.0 * p - 1.0) + 2.0) / 8.0;
}

double estimation_prob_unsimplified(double theta, double p) {
  require_theta(theta);
  require_unit(p, "P");
  const double s = std::sin(theta);
  return (1.0 + s) / 2.0 * (p / 2.0 + (1.0 - p) / 4.0) + (1.0 - s) / 2.0 * ((1.0 - p) / 4.0);
}

double p_e_max(double total) { return (sin_theta_from_total(total) + 1.0) / 4.0; }

double p_e_retrieve(double p_e_m, double total, int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("N must be even and at least 2, got " + std::to_string(n));
  }
  require_unit(p_e_m, "P_e^m");
  require_unit(total, "Total");
  return std::pow(p_e_m * (1.0 - total), n / 2);
}

double p_e_retrieve_chain(double total, int n) { return p_e_retrieve(p_e_max(total), total, n); }

}  // namespace qsdc::adversary
