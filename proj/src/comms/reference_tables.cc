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

#include "qsdc/comms/reference_tables.h"

#include <fmt/format.h>

namespace qsdc::comms {
namespace {

constexpr auto P = qcore::XOutcome::kPlus;
constexpr auto M = qcore::XOutcome::kMinus;

}  // namespace

const std::vector<ReferenceRow>& reference_rows_2party() {
  static const std::vector<ReferenceRow> rows = {
      {P, "Phi+", "00"}, {P, "psi+", "01"}, {P, "psi-", "10"}, {P, "Phi-", "11"},
      {M, "Phi-", "00"}, {M, "psi-", "01"}, {M, "psi+", "10"}, {M, "Phi+", "11"},
  };
  return rows;
}

const std::vector<ReferenceRow>& reference_rows_3party() {
  static const std::vector<ReferenceRow> rows = {
      {P, "Psi+", "000"},    {P, "phi+", "001"},    {P, "psi+", "010"},
      {P, "varphi+", "011"}, {P, "psi-", "100"},    {P, "varphi-", "101"},
      {P, "Psi-", "110"},    {P, "phi-", "111"},    {M, "Psi-", "000"},
      {M, "phi-", "001"},    {M, "psi-", "010"},    {M, "varphi-", "011"},
      {M, "psi+", "100"},    {M, "varphi+", "101"}, {M, "Psi+", "110"},
      {M, "phi+", "111"},
  };
  return rows;
}

const std::vector<ExampleStep>& example_100111() {
  static const std::vector<ExampleStep> steps = {
      {"10", qcore::PauliOp::kY, "psi-", P},
      {"01", qcore::PauliOp::kX, "psi+", P},
      {"11", qcore::PauliOp::kZ, "Phi+", M},
  };
  return steps;
}

std::vector<Mismatch> compare_with_reference(const DecodeTable& table,
                                             const std::vector<ReferenceRow>& ref) {
  std::vector<Mismatch> out;
  for (const ReferenceRow& row : ref) {
    const qcore::GhzOutcome g = qcore::parse_ghz_outcome(row.ghz, table.n_users());
    const auto got = table.lookup(g, row.pub);
    if (!got || *got != row.bits) out.push_back(Mismatch{row, got.value_or("")});
  }
  return out;
}

std::string format_table(const DecodeTable& table) {
  std::string out = fmt::format("# {} mode, {} users\n", to_string(table.mode()), table.n_users());
  out += "publication\tmeasurement\toperations\tbits\n";
  for (const DecodeEntry& e : table.entries()) {
    std::string ops;
    for (auto op : e.ops) ops += qcore::to_string(op);
    out += fmt::format("{}\t{}\t{}\t{}\n", qcore::to_string(e.pub), e.ghz.name(), ops, e.bits);
  }
  return out;
}

}  // namespace qsdc::comms
