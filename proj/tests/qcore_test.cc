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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracle.h"
#include "qsdc/qcore/density.h"
#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"
#include "qsdc/qcore/random_state.h"
#include "qsdc/qcore/rng.h"
#include "qsdc/qcore/state_register.h"

namespace qsdc::qcore {
namespace {

const double kR = 1.0 / std::sqrt(2.0);

std::vector<QubitId> make_ids(int n) {
  QubitAllocator a;
  std::vector<QubitId> out;
  for (int k = 0; k < n; ++k) out.push_back(a.allocate(PartyId::user(k + 1)));
  return out;
}

StateRegister plus(QubitId q) { return StateRegister::single(q, kR, kR); }
StateRegister minus(QubitId q) { return StateRegister::single(q, kR, -kR); }

TEST(Pauli, XFlipsZero) {
  auto q = make_ids(1);
  StateRegister r = StateRegister::computational(q, 0);
  apply_pauli(r, q[0], PauliOp::kX);
  EXPECT_NEAR(std::abs(r.amplitude(1)), 1.0, 1e-12);
}

TEST(Pauli, YIsRealAntisymmetric) {
  auto q = make_ids(1);
  StateRegister one = StateRegister::computational(q, 1);
  apply_pauli(one, q[0], PauliOp::kY);
  EXPECT_NEAR(std::abs(one.amplitude(0) - Complex(1.0)), 0.0, 1e-12);
  StateRegister zero = StateRegister::computational(q, 0);
  apply_pauli(zero, q[0], PauliOp::kY);
  EXPECT_NEAR(std::abs(zero.amplitude(1) - Complex(-1.0)), 0.0, 1e-12);
}

TEST(Pauli, ZFlipsPhase) {
  auto q = make_ids(1);
  StateRegister r = plus(q[0]);
  apply_pauli(r, q[0], PauliOp::kZ);
  EXPECT_TRUE(equal_up_to_phase(r, minus(q[0])));
  EXPECT_NEAR(std::abs(r.amplitude(1) - Complex(-kR)), 0.0, 1e-12);
}

TEST(Pauli, UnknownQubitThrows) {
  auto q = make_ids(2);
  StateRegister r = StateRegister::computational({q[0]}, 0);
  EXPECT_THROW(apply_pauli(r, q[1], PauliOp::kX), std::out_of_range);
  EXPECT_THROW(apply_pauli(r, q[1], PauliOp::kI), std::out_of_range);
}

TEST(Pauli, MatchesDenseOracle) {
  Rng rng(3);
  auto q = make_ids(3);
  const Eigen::Matrix2cd ref[] = {Eigen::Matrix2cd::Identity(), oracle::X(), oracle::Y(), oracle::Z()};
  for (int op = 0; op < 4; ++op) {
    for (int k = 0; k < 3; ++k) {
      StateRegister r = random_state(q, rng);
      const Eigen::VectorXcd expect = oracle::on1(ref[op], k, 3) * oracle::vec(r);
      apply_pauli(r, q[k], static_cast<PauliOp>(op));
      EXPECT_LT((oracle::vec(r) - expect).norm(), 1e-12);
    }
  }
}

TEST(Controlled, C0IsCnot) {
  auto q = make_ids(2);
  StateRegister r = StateRegister::computational(q, 0b10);
  apply_controlled(r, q[0], q[1], ControlledOp::kC0);
  EXPECT_NEAR(std::abs(r.amplitude(0b11)), 1.0, 1e-12);
}

TEST(Controlled, C1FlipsOnMinusControl) {
  auto q = make_ids(2);
  StateRegister r = compose(minus(q[0]), StateRegister::computational({q[1]}, 0));
  apply_controlled(r, q[0], q[1], ControlledOp::kC1);
  EXPECT_TRUE(equal_up_to_phase(r, compose(minus(q[0]), StateRegister::computational({q[1]}, 1))));
}

TEST(Controlled, C1IdleOnPlusControl) {
  auto q = make_ids(2);
  const StateRegister in = compose(plus(q[0]), StateRegister::computational({q[1]}, 0));
  StateRegister r = in;
  apply_controlled(r, q[0], q[1], ControlledOp::kC1);
  EXPECT_TRUE(equal_up_to_phase(r, in));
}

TEST(Controlled, SameQubitThrows) {
  auto q = make_ids(2);
  StateRegister r = StateRegister::computational(q, 0);
  EXPECT_THROW(apply_controlled(r, q[0], q[0], ControlledOp::kC0), std::invalid_argument);
}

TEST(Controlled, MatchesDenseOracleAnyPlacement) {
  Rng rng(5);
  auto q = make_ids(4);
  for (int c = 0; c < 4; ++c) {
    for (int t = 0; t < 4; ++t) {
      if (c == t) continue;
      for (ControlledOp op : {ControlledOp::kC0, ControlledOp::kC1}) {
        StateRegister r = random_state(q, rng);
        const Eigen::Matrix4cd g = op == ControlledOp::kC0 ? oracle::cnot() : oracle::cnot_x();
        const Eigen::VectorXcd expect = oracle::on2(g, c, t, 4) * oracle::vec(r);
        apply_controlled(r, q[c], q[t], op);
        EXPECT_LT((oracle::vec(r) - expect).norm(), 1e-12);
      }
    }
  }
}

TEST(Bell, PhiPlusAndPsiMinus) {
  auto q = make_ids(2);
  const StateRegister phi = make_bell(q[0], q[1]);
  EXPECT_NEAR(phi.amplitude(0).real(), kR, 1e-12);
  EXPECT_NEAR(phi.amplitude(3).real(), kR, 1e-12);
  const StateRegister psi = make_bell(q[0], q[1], BellOutcome::kPsiMinus);
  EXPECT_NEAR(psi.amplitude(1).real(), kR, 1e-12);
  EXPECT_NEAR(psi.amplitude(2).real(), -kR, 1e-12);
  for (int b = 0; b < 4; ++b) {
    EXPECT_NEAR(make_bell(q[0], q[1], static_cast<BellOutcome>(b)).norm(), 1.0, 1e-12);
  }
}

TEST(Ghz, ThreeTwoAndFiveQubits) {
  auto q = make_ids(5);
  EXPECT_LT((oracle::vec(make_ghz(std::vector<QubitId>(q.begin(), q.begin() + 3))) - oracle::ghz(3)).norm(), 1e-12);
  EXPECT_TRUE(equal_up_to_phase(make_ghz(std::vector<QubitId>{q[0], q[1]}), make_bell(q[0], q[1])));
  const StateRegister g5 = make_ghz(q);
  for (std::size_t i = 0; i < 32; ++i) {
    const double expect = (i == 0 || i == 31) ? kR : 0.0;
    EXPECT_NEAR(std::abs(g5.amplitude(i)), expect, 1e-12) << i;
  }
}

TEST(Ghz, TooFewQubitsThrows) {
  auto q = make_ids(1);
  EXPECT_THROW(make_ghz(q), std::invalid_argument);
}

TEST(Compose, OrderAndExpansion) {
  auto q = make_ids(3);
  const StateRegister ab = compose(StateRegister::computational({q[0]}, 0),
                                   StateRegister::computational({q[1]}, 1));
  EXPECT_NEAR(std::abs(ab.amplitude(0b01)), 1.0, 1e-12);
  const StateRegister r = compose(make_bell(q[0], q[1]), StateRegister::computational({q[2]}, 0));
  EXPECT_NEAR(r.amplitude(0b000).real(), kR, 1e-12);
  EXPECT_NEAR(r.amplitude(0b110).real(), kR, 1e-12);
  EXPECT_NEAR(r.norm(), 1.0, 1e-12);
}

TEST(Compose, OverlapThrows) {
  auto q = make_ids(2);
  EXPECT_THROW(compose(make_bell(q[0], q[1]), StateRegister::computational({q[1]}, 0)),
               std::invalid_argument);
}

TEST(Register, RejectsBadInput) {
  auto q = make_ids(2);
  EXPECT_THROW(StateRegister({q[0], q[0]}, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(StateRegister({q[0]}, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(StateRegister({q[0]}, {1, 1}), std::invalid_argument);
}

TEST(Register, QubitCap) {
  const std::size_t saved = StateRegister::max_qubits();
  StateRegister::set_max_qubits(3);
  auto q = make_ids(4);
  EXPECT_THROW(StateRegister::computational(q, 0), std::length_error);
  StateRegister::set_max_qubits(saved);
  EXPECT_NO_THROW(StateRegister::computational(q, 0));
}

TEST(Register, DropEntangledQubitThrows) {
  auto q = make_ids(2);
  EXPECT_THROW(drop_qubit(make_bell(q[0], q[1]), q[0]), std::invalid_argument);
  const StateRegister r = compose(plus(q[0]), StateRegister::computational({q[1]}, 1));
  EXPECT_TRUE(equal_up_to_phase(drop_qubit(r, q[1]), plus(q[0])));
}

TEST(Register, PermuteReordersBits) {
  auto q = make_ids(2);
  const StateRegister r = StateRegister::computational(q, 0b01);
  const StateRegister p = permute(r, std::vector<QubitId>{q[1], q[0]});
  EXPECT_NEAR(std::abs(p.amplitude(0b10)), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(r, p), 1.0, 1e-12);
}

TEST(MeasureZ, Deterministic) {
  Rng rng(1);
  auto q = make_ids(1);
  StateRegister r = StateRegister::computational(q, 1);
  EXPECT_EQ(measure_z(r, q[0], rng), 1);
}

TEST(MeasureZ, PlusIsFair) {
  Rng rng(2);
  auto q = make_ids(1);
  const int trials = 10000;
  int ones = 0;
  for (int t = 0; t < trials; ++t) {
    StateRegister r = plus(q[0]);
    ones += measure_z(r, q[0], rng);
  }
  EXPECT_NEAR(ones / double(trials), 0.5, oracle::three_sigma(0.5, trials));
}

TEST(MeasureZ, BellPairCorrelated) {
  Rng rng(4);
  auto q = make_ids(2);
  for (int t = 0; t < 200; ++t) {
    StateRegister r = make_bell(q[0], q[1]);
    const int a = measure_z(r, q[0], rng);
    EXPECT_EQ(measure_z(r, q[1], rng), a);
  }
}

TEST(MeasureX, PlusAndZero) {
  Rng rng(6);
  auto q = make_ids(1);
  StateRegister p = plus(q[0]);
  EXPECT_EQ(measure_x(p, q[0], rng), XOutcome::kPlus);
  const auto probs = outcome_probabilities(StateRegister::computational(q, 0), q, MeasurementBasis::x());
  EXPECT_NEAR(probs[0], 0.5, 1e-12);
  EXPECT_NEAR(probs[1], 0.5, 1e-12);
}

TEST(MeasureX, GhzLeavesPhiPair) {
  Rng rng(8);
  auto q = make_ids(3);  // i, j, q
  for (int t = 0; t < 50; ++t) {
    StateRegister r = make_ghz(q);
    const XOutcome x = measure_x(r, q[2], rng);
    const StateRegister pair = drop_qubit(r, q[2]);
    const BellOutcome want = x == XOutcome::kPlus ? BellOutcome::kPhiPlus : BellOutcome::kPhiMinus;
    EXPECT_TRUE(equal_up_to_phase(pair, make_bell(q[0], q[1], want)));
  }
}

TEST(MeasureBell, Outcomes) {
  Rng rng(9);
  auto q = make_ids(2);
  StateRegister phi = make_bell(q[0], q[1]);
  EXPECT_EQ(measure_bell(phi, q[0], q[1], rng), BellOutcome::kPhiPlus);
  const auto probs = outcome_probabilities(StateRegister::computational(q, 0), q, MeasurementBasis::bell());
  EXPECT_NEAR(probs[0], 0.5, 1e-12);
  EXPECT_NEAR(probs[1], 0.5, 1e-12);
  EXPECT_NEAR(probs[2] + probs[3], 0.0, 1e-12);
}

TEST(MeasureBell, YEncodedPairWithServerPlus) {
  auto q = make_ids(3);  // i, q, j
  StateRegister r = make_ghz(q);
  apply_pauli(r, q[0], PauliOp::kY);
  const std::vector<QubitId> order{q[0], q[2], q[1]};
  const auto probs = outcome_probabilities(
      r, order, MeasurementBasis::product(MeasurementBasis::bell(), MeasurementBasis::x()));
  // outcome = bell * 2 + x
  EXPECT_NEAR(probs[2 * int(BellOutcome::kPsiMinus) + 0], 0.5, 1e-12);
  EXPECT_NEAR(probs[2 * int(BellOutcome::kPsiPlus) + 1], 0.5, 1e-12);
}

TEST(MeasureGhz, BasisStates) {
  Rng rng(10);
  auto q = make_ids(3);
  StateRegister g = make_ghz(q);
  const GhzOutcome a = measure_ghz(g, q, rng);
  EXPECT_EQ(a.pattern, 0u);
  EXPECT_FALSE(a.minus);
  EXPECT_EQ(a.name(), "Psi+");
  StateRegister psi({q[0], q[1], q[2]}, {0, 0, 0, kR, -kR, 0, 0, 0});
  const GhzOutcome b = measure_ghz(psi, q, rng);
  EXPECT_EQ(b.pattern, 0b011u);
  EXPECT_TRUE(b.minus);
  EXPECT_EQ(b.name(), "psi-");
}

TEST(MeasureGhz, BornRuleOnRandomState) {
  Rng rng(11);
  auto q = make_ids(3);
  const StateRegister s = random_state(q, rng);
  std::vector<double> expect(8);
  for (std::size_t k = 0; k < 8; ++k) {
    expect[k] = std::norm(oracle::ghz_basis(3, k / 2, k % 2).dot(oracle::vec(s)));
  }
  const int trials = 10000;
  std::vector<int> counts(8, 0);
  for (int t = 0; t < trials; ++t) {
    StateRegister r = s;
    ++counts[ghz_index(measure_ghz(r, q, rng))];
  }
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(counts[k] / double(trials), expect[k], oracle::three_sigma(expect[k], trials) + 1e-9) << k;
  }
}

TEST(MeasureGhz, CollapseOntoBasisState) {
  Rng rng(12);
  auto q = make_ids(4);
  StateRegister r = random_state(q, rng);
  const GhzOutcome g = measure_ghz(r, q, rng);
  EXPECT_TRUE(oracle::same_up_to_phase(oracle::vec(r), oracle::ghz_basis(4, g.pattern, g.minus)));
}

TEST(Glyphs, ThreeQubitMapping) {
  EXPECT_EQ(parse_ghz_outcome("Psi+", 3).pattern, 0b000u);
  EXPECT_EQ(parse_ghz_outcome("varphi-", 3).pattern, 0b001u);
  EXPECT_EQ(parse_ghz_outcome("phi+", 3).pattern, 0b010u);
  EXPECT_EQ(parse_ghz_outcome("psi+", 3).pattern, 0b011u);
  EXPECT_THROW(parse_ghz_outcome("chi+", 3), std::invalid_argument);
  for (std::uint32_t p = 0; p < 4; ++p) {
    for (bool m : {false, true}) {
      const GhzOutcome g{3, p, m};
      EXPECT_EQ(parse_ghz_outcome(g.name(), 3), g);
    }
  }
}

TEST(Properties, NormPreservedUnderRandomCircuits) {
  Rng rng(13);
  auto q = make_ids(5);
  StateRegister r = random_state(q, rng);
  for (int step = 0; step < 500; ++step) {
    const auto a = static_cast<std::size_t>(rng.below(5));
    auto b = static_cast<std::size_t>(rng.below(4));
    if (b >= a) ++b;
    if (rng.bit()) {
      apply_pauli(r, q[a], static_cast<PauliOp>(rng.below(4)));
    } else {
      apply_controlled(r, q[a], q[b], rng.bit() ? ControlledOp::kC1 : ControlledOp::kC0);
    }
    ASSERT_NEAR(r.norm(), 1.0, 1e-9);
  }
}

TEST(Properties, SelfInverses) {
  Rng rng(14);
  auto q = make_ids(3);
  for (int t = 0; t < 100; ++t) {
    const StateRegister s = random_state(q, rng);
    for (PauliOp op : {PauliOp::kX, PauliOp::kZ}) {
      StateRegister r = s;
      apply_pauli(r, q[0], op);
      apply_pauli(r, q[0], op);
      EXPECT_LT((oracle::vec(r) - oracle::vec(s)).norm(), 1e-9);
    }
    StateRegister y = s;
    apply_pauli(y, q[1], PauliOp::kY);
    apply_pauli(y, q[1], PauliOp::kY);
    EXPECT_LT((oracle::vec(y) + oracle::vec(s)).norm(), 1e-9);
    for (ControlledOp op : {ControlledOp::kC0, ControlledOp::kC1}) {
      StateRegister r = s;
      apply_controlled(r, q[2], q[0], op);
      apply_controlled(r, q[2], q[0], op);
      EXPECT_LT((oracle::vec(r) - oracle::vec(s)).norm(), 1e-9);
    }
  }
}

TEST(Properties, GhzBasisIsComplete) {
  Rng rng(15);
  for (int n = 2; n <= 5; ++n) {
    auto q = make_ids(n);
    const auto basis = MeasurementBasis::ghz(n);
    ASSERT_EQ(basis.size(), std::size_t{1} << n);
    for (int t = 0; t < 100; ++t) {
      const auto probs = outcome_probabilities(random_state(q, rng), q, basis);
      EXPECT_NEAR(std::accumulate(probs.begin(), probs.end(), 0.0), 1.0, 1e-9);
    }
  }
}

TEST(Properties, SeedDeterminism) {
  auto q = make_ids(3);
  auto run = [&](std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::size_t> outs;
    for (int t = 0; t < 50; ++t) {
      StateRegister r = random_state(q, rng);
      outs.push_back(ghz_index(measure_ghz(r, q, rng)));
      outs.push_back(static_cast<std::size_t>(measure_z(r, q[0], rng)));
    }
    return outs;
  };
  EXPECT_EQ(run(77), run(77));
  EXPECT_NE(run(77), run(78));
}

TEST(Rng, KnownSequenceIndependentOfLibrary) {
  // mt19937_64 is fully specified; its 10000th output from the default
  // seed is fixed by the standard.
  std::mt19937_64 ref;
  ref.discard(9999);
  Rng rng(5489u);
  for (int k = 0; k < 9999; ++k) rng.next();
  EXPECT_EQ(rng.next(), 9981545732273789042ull);
  EXPECT_EQ(ref(), 9981545732273789042ull);
}

TEST(Rng, BelowIsInRangeAndCoversAll) {
  Rng rng(16);
  std::vector<int> seen(7, 0);
  for (int t = 0; t < 7000; ++t) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  for (int c : seen) EXPECT_GT(c, 800);
}

TEST(Density, BellMarginalIsMaximallyMixed) {
  auto q = make_ids(2);
  const QubitId keep[] = {q[0]};
  const Eigen::MatrixXcd rho = reduced_density_matrix(make_bell(q[0], q[1]), keep);
  EXPECT_LT((rho - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-12);
  EXPECT_NEAR(von_neumann_entropy(rho), 1.0, 1e-12);
  const QubitId both[] = {q[0], q[1]};
  EXPECT_NEAR(von_neumann_entropy(reduced_density_matrix(make_bell(q[0], q[1]), both)), 0.0, 1e-9);
}

TEST(RandomState, UnitaryIsUnitary) {
  Rng rng(17);
  const Eigen::MatrixXcd u = random_unitary(8, rng);
  EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-10);
}

TEST(RandomState, CompleteUnitaryKeepsColumns) {
  Rng rng(18);
  const Eigen::MatrixXcd u = random_unitary(4, rng);
  Eigen::MatrixXcd cols(4, 2);
  cols.col(0) = u.col(1);
  cols.col(1) = u.col(3);
  const Eigen::MatrixXcd c = complete_unitary(cols, {0, 2});
  EXPECT_LT((c.col(0) - u.col(1)).norm(), 1e-12);
  EXPECT_LT((c.col(2) - u.col(3)).norm(), 1e-12);
  EXPECT_LT((c.adjoint() * c - Eigen::MatrixXcd::Identity(4, 4)).norm(), 1e-10);
}

}  // namespace
}  // namespace qsdc::qcore
