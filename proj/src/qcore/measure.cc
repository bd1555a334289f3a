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

#include "qsdc/qcore/measure.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsdc::qcore {
namespace {

// Probabilities below this are numerical residue of exact zeros.
constexpr double kResidue = 1e-14;

// Index bookkeeping for a measurement over `qs` inside a register.
struct Layout {
  std::vector<std::uint64_t> scatter;  // local index -> global bits
  std::vector<std::uint64_t> rest;     // enumeration of the unmeasured bits
};

Layout make_layout(const StateRegister& reg, std::span<const QubitId> qs) {
  const std::size_t n = reg.num_qubits();
  const std::size_t k = qs.size();
  std::vector<int> pos(k);
  std::uint64_t measured = 0;
  for (std::size_t t = 0; t < k; ++t) {
    pos[t] = reg.bit_position(qs[t]);
    const std::uint64_t bit = std::uint64_t{1} << pos[t];
    if (measured & bit) throw std::invalid_argument("measurement lists a qubit twice");
    measured |= bit;
  }
  Layout out;
  out.scatter.resize(std::size_t{1} << k);
  for (std::uint64_t s = 0; s < out.scatter.size(); ++s) {
    std::uint64_t g = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if ((s >> (k - 1 - t)) & 1U) g |= std::uint64_t{1} << pos[t];
    }
    out.scatter[s] = g;
  }
  std::vector<int> free_bits;
  for (std::size_t b = 0; b < n; ++b) {
    if (!((measured >> b) & 1U)) free_bits.push_back(static_cast<int>(b));
  }
  out.rest.resize(std::size_t{1} << free_bits.size());
  for (std::uint64_t r = 0; r < out.rest.size(); ++r) {
    std::uint64_t g = 0;
    for (std::size_t b = 0; b < free_bits.size(); ++b) {
      if ((r >> b) & 1U) g |= std::uint64_t{1} << free_bits[b];
    }
    out.rest[r] = g;
  }
  return out;
}

void check_basis(const StateRegister& reg, std::span<const QubitId> qs,
                 const MeasurementBasis& basis) {
  if (static_cast<int>(qs.size()) != basis.num_qubits()) {
    throw std::invalid_argument("measurement basis width does not match qubit list");
  }
  for (const QubitId& q : qs) reg.slot(q);
}

// <b|_qs applied to the register: amplitudes over the unmeasured qubits.
std::vector<Complex> project(const StateRegister& reg, const Layout& layout,
                             const BasisVector& b) {
  const auto amps = reg.amplitudes();
  std::vector<Complex> out(layout.rest.size());
  for (std::size_t r = 0; r < layout.rest.size(); ++r) {
    Complex s{};
    for (const auto& [local, c] : b.terms) s += std::conj(c) * amps[layout.rest[r] | layout.scatter[local]];
    out[r] = s;
  }
  return out;
}

double squared_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& a : v) s += std::norm(a);
  return s;
}

}  // namespace

MeasurementBasis::MeasurementBasis(int num_qubits, std::vector<BasisVector> vectors)
    : num_qubits_(num_qubits), vectors_(std::move(vectors)) {
  if (num_qubits < 1) throw std::invalid_argument("measurement basis needs a qubit");
  if (vectors_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("measurement basis must be complete");
  }
}

MeasurementBasis MeasurementBasis::z() {
  return MeasurementBasis(1, {BasisVector{{{0, 1.0}}}, BasisVector{{{1, 1.0}}}});
}

MeasurementBasis MeasurementBasis::x() {
  const double h = std::numbers::sqrt2 / 2.0;
  return MeasurementBasis(1, {BasisVector{{{0, h}, {1, h}}}, BasisVector{{{0, h}, {1, -h}}}});
}

MeasurementBasis MeasurementBasis::bell() { return ghz(2); }

MeasurementBasis MeasurementBasis::ghz(int k) {
  if (k < 2) throw std::invalid_argument("GHZ basis needs at least two qubits");
  const double h = std::numbers::sqrt2 / 2.0;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<BasisVector> vs;
  vs.reserve(std::size_t{1} << k);
  for (std::uint32_t p = 0; p < (std::uint32_t{1} << (k - 1)); ++p) {
    vs.push_back(BasisVector{{{p, h}, {full ^ p, h}}});
    vs.push_back(BasisVector{{{p, h}, {full ^ p, -h}}});
  }
  return MeasurementBasis(k, std::move(vs));
}

MeasurementBasis MeasurementBasis::dense(const Eigen::MatrixXcd& columns) {
  const auto dim = columns.rows();
  int k = 0;
  while ((Eigen::Index{1} << k) < dim) ++k;
  if ((Eigen::Index{1} << k) != dim || columns.cols() != dim) {
    throw std::invalid_argument("dense basis must be a 2^k square matrix");
  }
  std::vector<BasisVector> vs(static_cast<std::size_t>(dim));
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (columns(r, c) != Complex{}) {
        vs[c].terms.emplace_back(static_cast<std::uint32_t>(r), columns(r, c));
      }
    }
  }
  return MeasurementBasis(k, std::move(vs));
}

MeasurementBasis MeasurementBasis::product(const MeasurementBasis& a, const MeasurementBasis& b) {
  const int kb = b.num_qubits();
  std::vector<BasisVector> vs;
  vs.reserve(a.size() * b.size());
  for (const BasisVector& va : a.vectors()) {
    for (const BasisVector& vb : b.vectors()) {
      BasisVector v;
      for (const auto& [ia, ca] : va.terms) {
        for (const auto& [ib, cb] : vb.terms) v.terms.emplace_back((ia << kb) | ib, ca * cb);
      }
      vs.push_back(std::move(v));
    }
  }
  return MeasurementBasis(a.num_qubits() + kb, std::move(vs));
}

GhzOutcome ghz_outcome_from_index(int num_qubits, std::size_t index) {
  return GhzOutcome{num_qubits, static_cast<std::uint32_t>(index >> 1), (index & 1U) != 0};
}

std::size_t ghz_index(const GhzOutcome& g) {
  return (static_cast<std::size_t>(g.pattern) << 1) | (g.minus ? 1U : 0U);
}

std::vector<double> outcome_probabilities(const StateRegister& reg, std::span<const QubitId> qs,
                                          const MeasurementBasis& basis) {
  check_basis(reg, qs, basis);
  const Layout layout = make_layout(reg, qs);
  std::vector<double> probs(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    probs[k] = squared_norm(project(reg, layout, basis.vectors()[k]));
  }
  return probs;
}

std::size_t measure(StateRegister& reg, std::span<const QubitId> qs,
                    const MeasurementBasis& basis, Rng& rng) {
  std::vector<double> probs = outcome_probabilities(reg, qs, basis);
  for (double& p : probs) {
    if (p < kResidue) p = 0.0;
  }
  const std::size_t k = sample_index(probs, rng);

  const Layout layout = make_layout(reg, qs);
  const BasisVector& b = basis.vectors()[k];
  std::vector<Complex> rest = project(reg, layout, b);
  const double scale = 1.0 / std::sqrt(squared_norm(rest));

  auto& amps = RegisterAccess::amps(reg);
  std::fill(amps.begin(), amps.end(), Complex{});
  for (std::size_t r = 0; r < layout.rest.size(); ++r) {
    if (rest[r] == Complex{}) continue;
    for (const auto& [local, c] : b.terms) amps[layout.rest[r] | layout.scatter[local]] = c * rest[r] * scale;
  }
  return k;
}

int measure_z(StateRegister& reg, QubitId q, Rng& rng) {
  const QubitId qs[] = {q};
  return static_cast<int>(measure(reg, qs, MeasurementBasis::z(), rng));
}

XOutcome measure_x(StateRegister& reg, QubitId q, Rng& rng) {
  const QubitId qs[] = {q};
  return measure(reg, qs, MeasurementBasis::x(), rng) == 0 ? XOutcome::kPlus : XOutcome::kMinus;
}

BellOutcome measure_bell(StateRegister& reg, QubitId q1, QubitId q2, Rng& rng) {
  const QubitId qs[] = {q1, q2};
  return static_cast<BellOutcome>(measure(reg, qs, MeasurementBasis::bell(), rng));
}

GhzOutcome measure_ghz(StateRegister& reg, std::span<const QubitId> qs, Rng& rng) {
  const int k = static_cast<int>(qs.size());
  if (k < 2) throw std::invalid_argument("measure_ghz needs at least two qubits");
  return ghz_outcome_from_index(k, measure(reg, qs, MeasurementBasis::ghz(k), rng));
}

}  // namespace qsdc::qcore
