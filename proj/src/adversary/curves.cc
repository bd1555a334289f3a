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

#include "qsdc/adversary/curves.h"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "qsdc/adversary/closed_form.h"

namespace qsdc::adversary {
namespace {

constexpr double kDeTotals[] = {0.0, 0.125, 0.25, 0.5, 0.625, 0.75, 0.875};

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::vector<int> curve_ns() {
  std::vector<int> ns;
  for (int n = 2; n <= 16; n += 2) ns.push_back(n);
  return ns;
}

std::vector<double> curve_totals() {
  std::vector<double> t;
  for (int k = 0; k <= 100; ++k) t.push_back(k * 0.005);
  return t;
}

std::string fig2a_csv() {
  std::string out = "total,joint_info_bits\n";
  for (double t : curve_totals()) out += fmt::format("{:.3f},{:.10g}\n", t, two_way_joint_info(t));
  return out;
}

std::string fig2b_csv() {
  std::string out = "total,p_e_max\n";
  for (double t : curve_totals()) out += fmt::format("{:.3f},{:.10g}\n", t, p_e_max(t));
  return out;
}

std::string fig2c_csv() {
  std::string out = "total,n,p_e_retrieve\n";
  for (double t : curve_totals()) {
    for (int n : curve_ns()) out += fmt::format("{:.3f},{},{:.10g}\n", t, n, p_e_retrieve_chain(t, n));
  }
  return out;
}

std::string fig2de_csv() {
  std::string out = "p_e_m,total,n,p_e_retrieve\n";
  for (int k = 1; k <= 7; ++k) {
    const double pem = 0.125 * k;
    for (double t : kDeTotals) {
      for (int n : curve_ns()) {
        out += fmt::format("{:.3f},{:.3f},{},{:.10g}\n", pem, t, n, p_e_retrieve(pem, t, n));
      }
    }
  }
  return out;
}

bool SpotCheck::pass() const {
  return std::abs(actual - expected) <= rel_tol * std::abs(expected);
}

std::vector<SpotCheck> curve_spot_checks() {
  const double tol = 0.01;
  return {
      {"joint info at Total=0.25", 0.5, two_way_joint_info(0.25), 1e-12},
      {"retrieve N=16 Total=0", 1.53e-5, p_e_retrieve_chain(0.0, 16), tol},
      {"retrieve N=16 Total=0.125", 7.7e-4, p_e_retrieve_chain(0.125, 16), tol},
      {"retrieve N=16 Total=0.25", 3.91e-4, p_e_retrieve_chain(0.25, 16), tol},
      {"retrieve N=16 Total=0.5", 5.96e-8, p_e_retrieve_chain(0.5, 16), tol},
      {"retrieve p_e_m=0.5 Total=0 N=2", 0.5, p_e_retrieve(0.5, 0.0, 2), tol},
      {"retrieve p_e_m=0.5 Total=0 N=4", 0.25, p_e_retrieve(0.5, 0.0, 4), tol},
      {"retrieve p_e_m=0.5 Total=0 N=8", 0.0625, p_e_retrieve(0.5, 0.0, 8), tol},
      {"retrieve p_e_m=0.5 Total=0 N=16", 3.91e-3, p_e_retrieve(0.5, 0.0, 16), tol},
      {"retrieve p_e_m=0.125 Total=0.5 N=16", 2.32e-10, p_e_retrieve(0.125, 0.5, 16), tol},
      // Published as 0.408; the formula gives 0.375.
      {"retrieve N=2 Total=0.25 (formula value)", 0.375, p_e_retrieve_chain(0.25, 2), 1e-12},
  };
}

void write_curves(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "fig2a.csv", fig2a_csv());
  write_file(dir / "fig2b.csv", fig2b_csv());
  write_file(dir / "fig2c.csv", fig2c_csv());
  write_file(dir / "fig2de.csv", fig2de_csv());
}

}  // namespace qsdc::adversary
