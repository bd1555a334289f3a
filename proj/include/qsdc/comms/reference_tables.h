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

// Published decode rows used as conformance vectors against the generated
// tables, and the worked 100111 example.

#pragma once

#include <string>
#include <vector>

#include "qsdc/comms/decode_table.h"

namespace qsdc::comms {

struct ReferenceRow {
  qcore::XOutcome pub;
  std::string ghz;   // glyph name, e.g. "psi-"
  std::string bits;  // symbol
};

/// Two users, partial mode: 8 rows.
const std::vector<ReferenceRow>& reference_rows_2party();
/// Three users, partial mode: 16 rows.
const std::vector<ReferenceRow>& reference_rows_3party();

/// One symbol of the 100111 walk-through.
struct ExampleStep {
  std::string bits;
  qcore::PauliOp op;
  std::string measurement;
  qcore::XOutcome pub;
};

/// Partial and full variants share the same steps.
const std::vector<ExampleStep>& example_100111();

struct Mismatch {
  ReferenceRow row;
  std::string generated;  // symbol the oracle assigns, or "" if none
};

/// Rows of `ref` whose symbol differs from the generated table.
std::vector<Mismatch> compare_with_reference(const DecodeTable& table,
                                             const std::vector<ReferenceRow>& ref);

/// Plain-text listing of a table.
std::string format_table(const DecodeTable& table);

}  // namespace qsdc::comms
