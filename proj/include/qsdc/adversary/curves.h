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

// Value tables for the two-way attack curves.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace qsdc::adversary {

/// Even N values swept by the retrieval tables.
std::vector<int> curve_ns();
/// Total from 0 to 0.5 in steps of 0.005.
std::vector<double> curve_totals();

/// "total,joint_info_bits" rows.
std::string fig2a_csv();
/// "total,p_e_max" rows.
std::string fig2b_csv();
/// "total,n,p_e_retrieve" rows, p_e_m chained from Total.
std::string fig2c_csv();
/// "p_e_m,total,n,p_e_retrieve" rows with both factors swept.
std::string fig2de_csv();

struct SpotCheck {
  std::string label;
  double expected;
  double actual;
  double rel_tol;
  bool pass() const;
};

/// Published spot values against the formulas.
std::vector<SpotCheck> curve_spot_checks();

/// Writes fig2a.csv, fig2b.csv, fig2c.csv and fig2de.csv into `dir`
/// (created if missing). Throws std::runtime_error on I/O failure.
void write_curves(const std::filesystem::path& dir);

}  // namespace qsdc::adversary
