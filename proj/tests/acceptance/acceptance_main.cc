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

// Acceptance run: one PASS/FAIL line per criterion, each with its wall time
// and budget. Exit status is nonzero when any criterion fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "oracle.h"
#include "qsdc/adversary/closed_form.h"
#include "qsdc/adversary/curves.h"
#include "qsdc/adversary/intercept.h"
#include "qsdc/adversary/masquerade.h"
#include "qsdc/adversary/one_way.h"
#include "qsdc/auth/auth.h"
#include "qsdc/comms/decode_table.h"
#include "qsdc/comms/message.h"
#include "qsdc/comms/reference_tables.h"
#include "qsdc/comms/session.h"
#include "qsdc/comms/transmission.h"
#include "qsdc/qcore/density.h"
#include "qsdc/qcore/gates.h"
#include "qsdc/qcore/measure.h"
#include "qsdc/qcore/random_state.h"

namespace {

using namespace qsdc;
using comms::Mode;
using qcore::PartyId;
using qcore::QubitId;
using qcore::Rng;
using qcore::StateRegister;

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void check(bool ok, std::string what) {
    if (!ok) pass = false;
    lines.push_back(fmt::format("{} {}", ok ? "ok  " : "FAIL", what));
  }
  void note(std::string what) { lines.push_back("note " + std::move(what)); }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string random_bits(std::size_t n, Rng& rng) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += rng.bit() ? '1' : '0';
  return s;
}

std::unique_ptr<comms::Session> new_session(int n, Mode mode, std::uint64_t seed, std::size_t bits,
                                            double decoy_fraction) {
  comms::SessionConfig cfg;
  cfg.n_users = n;
  cfg.mode = mode;
  cfg.seed = seed;
  cfg.decoy_fraction = decoy_fraction;
  cfg.auth_rounds = comms::pairs_needed(bits, n, decoy_fraction);
  auto s = std::make_unique<comms::Session>(cfg);
  s->authenticate_all();
  return s;
}

std::string send(int n, Mode mode, const std::string& bits, std::uint64_t seed) {
  auto s = new_session(n, mode, seed, bits.size(), 0.0);
  s->transcript().set_recording(false);
  return comms::send_message(*s, bits).decoded;
}

// ---------------------------------------------------------------------------

Outcome worked_example() {
  Outcome o;
  const auto& steps = comms::example_100111();
  for (Mode mode : {Mode::kPartial, Mode::kFull}) {
    bool found = false;
    for (std::uint64_t seed = 0; seed < 4096 && !found; ++seed) {
      auto s = new_session(2, mode, seed, 6, 0.0);
      const auto res = comms::send_message(*s, "100111");
      const auto& syms = s->transcript().symbols();
      bool match = syms.size() == steps.size();
      for (std::size_t i = 0; match && i < syms.size(); ++i) {
        match = syms[i].measurement.name() == steps[i].measurement &&
                syms[i].publication == steps[i].pub;
      }
      if (!match) continue;
      found = true;
      bool ops = true;
      for (std::size_t i = 0; i < syms.size(); ++i) {
        ops = ops && syms[i].sent == steps[i].bits &&
              syms[i].ops == std::vector<qcore::PauliOp>{steps[i].op} &&
              syms[i].decoded == steps[i].bits;
      }
      std::string rows;
      for (const auto& sym : syms) {
        rows += fmt::format(" ({} {} {}{})", sym.sent, qcore::to_string(sym.ops[0]),
                            sym.measurement.name(), sym.publication == qcore::XOutcome::kPlus ? "+" : "-");
      }
      o.check(ops && res.decoded == "100111",
              fmt::format("{} mode, seed {}:{} -> decoded {}", comms::to_string(mode), seed, rows,
                          res.decoded));
    }
    if (!found) o.check(false, comms::to_string(mode) + " mode: no seed reproduced the branches");
  }
  return o;
}

Outcome round_trip_exhaustive() {
  Outcome o;
  for (Mode mode : {Mode::kPartial, Mode::kFull}) {
    std::size_t runs = 0, bad = 0;
    for (int v = 0; v < 16; ++v) {
      const std::string bits = fmt::format("{:04b}", v);
      for (std::uint64_t seed = 0; seed < 100; ++seed, ++runs) bad += send(2, mode, bits, seed) != bits;
    }
    o.check(bad == 0, fmt::format("2 users, {}: 16 messages x 100 seeds, {} of {} wrong",
                                  comms::to_string(mode), bad, runs));
    runs = bad = 0;
    for (int v = 0; v < 8; ++v) {
      const std::string bits = fmt::format("{:03b}", v);
      for (std::uint64_t seed = 0; seed < 100; ++seed, ++runs) bad += send(3, mode, bits, seed) != bits;
    }
    o.check(bad == 0, fmt::format("3 users, {}: 8 symbols x 100 seeds, {} of {} wrong",
                                  comms::to_string(mode), bad, runs));
    for (int n : {2, 3}) {
      double worst = 0.0;
      std::vector<double> per_symbol(std::size_t{1} << n, 0.0);
      for (const auto& e : comms::decode_table(mode, n).entries()) {
        per_symbol[std::stoul(e.bits, nullptr, 2)] += e.probability;
      }
      for (double p : per_symbol) worst = std::max(worst, std::abs(p - 1.0));
      o.check(worst < 1e-9, fmt::format("{} users, {}: every symbol decodes with probability 1 "
                                        "(max deviation {:.1e})",
                                        n, comms::to_string(mode), worst));
    }
  }
  return o;
}

Outcome n_user_generalization() {
  Outcome o;
  Rng rng(2024);
  for (int n : {4, 5, 6}) {
    for (Mode mode : {Mode::kPartial, Mode::kFull}) {
      std::size_t bad = 0;
      for (int t = 0; t < 1000; ++t) {
        const std::string bits = random_bits(1 + rng.below(3 * static_cast<std::uint64_t>(n)), rng);
        bad += send(n, mode, bits, rng.next()) != bits;
      }
      o.check(bad == 0, fmt::format("{} users, {}: {} of 1000 random messages wrong", n,
                                    comms::to_string(mode), bad));
    }
  }
  return o;
}

Outcome table_conformance() {
  Outcome o;
  const auto m2 = comms::compare_with_reference(comms::decode_table(Mode::kPartial, 2),
                                                comms::reference_rows_2party());
  const auto m3 = comms::compare_with_reference(comms::decode_table(Mode::kPartial, 3),
                                                comms::reference_rows_3party());
  for (const auto& m : m2) o.note(fmt::format("2-user mismatch {} -> {} (generated {})", m.row.ghz, m.row.bits, m.generated));
  for (const auto& m : m3) o.note(fmt::format("3-user mismatch {} -> {} (generated {})", m.row.ghz, m.row.bits, m.generated));
  o.check(m2.empty() && comms::reference_rows_2party().size() == 8,
          fmt::format("2 users: {} of 8 published rows differ", m2.size()));
  o.check(m3.empty() && comms::reference_rows_3party().size() == 16,
          fmt::format("3 users: {} of 16 published rows differ", m3.size()));
  for (int n : {2, 3}) {
    const auto& a = comms::decode_table(Mode::kPartial, n).entries();
    const auto& b = comms::decode_table(Mode::kFull, n).entries();
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].bits == b[i].bits && a[i].ghz == b[i].ghz && a[i].pub == b[i].pub;
    }
    o.check(same, fmt::format("{} users: full-mode table generated and equal to partial", n));
  }
  return o;
}

Outcome masquerade_detection() {
  Outcome o;
  Rng rng(515);
  const int rounds = 100000;
  double claim_gap = 0.0;
  for (int set = 0; set < 5; ++set) {
    const auto params = adversary::MasqueradeParams::random(rng);
    const double total = adversary::masquerade_detection_total(params);
    o.check(std::abs(total - 0.5) < 1e-12, fmt::format("set {}: analytic total {:.15f}", set, total));

    comms::Transcript log;
    log.set_recording(false);
    qcore::QubitAllocator ids;
    comms::Channel ch(PartyId::server(), PartyId::user(1), comms::ChannelKind::kQuantum, log, ids);
    ch.attach(adversary::masquerade_tap(params));
    std::size_t tries[4] = {}, rejects[4] = {};
    for (int r = 0; r < rounds; ++r) {
      const auto k = auth::KeyPair::from_value(static_cast<int>(rng.below(4)));
      ++tries[k.value()];
      rejects[k.value()] += auth::run_auth_round(0, k, ch, rng).round.outcome == auth::RoundOutcome::kReject;
    }
    const std::size_t all = std::accumulate(std::begin(rejects), std::end(rejects), std::size_t{0});
    const double freq = all / double(rounds);
    o.check(std::abs(freq - 0.5) <= oracle::three_sigma(0.5, rounds),
            fmt::format("set {}: rejection frequency {:.4f} (0.5 +- {:.4f})", set, freq,
                        oracle::three_sigma(0.5, rounds)));
    std::string keys;
    bool keys_ok = true;
    for (int v = 0; v < 4; ++v) {
      const double p = adversary::masquerade_detection(params, auth::KeyPair::from_value(v));
      const double f = rejects[v] / double(tries[v]);
      const double tol = oracle::three_sigma(p, tries[v]) + 1e-12;
      keys_ok = keys_ok && std::abs(f - p) <= tol;
      keys += fmt::format(" {:02b}:{:.4f}/{:.4f}", v, f, p);
      claim_gap = std::max(claim_gap, std::abs(p - adversary::masquerade_detection_claimed(
                                                       params, auth::KeyPair::from_value(v))));
    }
    o.check(keys_ok, fmt::format("set {}: per-key frequency/exact{}", set, keys));
  }
  o.note(fmt::format("keys 10/11 use the exact controlled-X-basis values; the claim that they "
                     "equal keys 01/00 is off by up to {:.3f} on these sets",
                     claim_gap));
  return o;
}

Outcome one_way_holevo() {
  Outcome o;
  const auto r = adversary::holevo_one_way();
  double worst = 0.0;
  for (const auto& rho : r.rho_ni) {
    const Eigen::VectorXd ev = qcore::hermitian_eigenvalues(rho);
    for (Eigen::Index i = 0; i < ev.size(); ++i) worst = std::max(worst, std::abs(ev[i] - 0.5));
    worst = std::max(worst, (rho - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).norm());
  }
  const Eigen::VectorXd ev = qcore::hermitian_eigenvalues(r.rho_n);
  for (Eigen::Index i = 0; i < ev.size(); ++i) worst = std::max(worst, std::abs(ev[i] - 0.5));
  o.check(worst < 1e-9, fmt::format("rho_n and all rho_ni equal I/2, max error {:.1e}", worst));
  double fid = 1.0;
  for (double f : r.closed_form_fidelity) fid = std::min(fid, f);
  o.check(std::abs(1.0 - fid) < 1e-9, fmt::format("circuit states match closed forms, min fidelity {:.12f}", fid));
  o.check(std::abs(r.chi) < 1e-9, fmt::format("chi = {:.1e} bits", r.chi));
  return o;
}

Outcome two_way_closed_forms() {
  Outcome o;
  const double ji = adversary::two_way_joint_info(0.25);
  o.check(std::abs(ji - 0.5) < 1e-12, fmt::format("joint_info(0.25) = {:.15f}", ji));
  for (const auto& c : adversary::curve_spot_checks()) {
    o.check(c.pass(), fmt::format("{}: {:.6g} vs {:.6g} (rel tol {:g})", c.label, c.actual,
                                  c.expected, c.rel_tol));
  }
  o.note("waiver: N=2, Total=0.25 is asserted at the formula value 0.375; the published plot "
         "label reads 0.408 while the same formula reproduces the published N=16 value");
  return o;
}

Outcome ghz_intercept() {
  Outcome o;
  Rng rng(808);
  const std::size_t symbols = 10000;
  for (int set = 0; set < 5; ++set) {
    const auto params = adversary::InterceptParams::z_monitor(rng);
    params.validate();
    const int n = 2 + set % 2;
    const int tapped = n - 1;
    comms::SessionConfig cfg;
    cfg.n_users = n;
    cfg.mode = set < 3 ? Mode::kPartial : Mode::kFull;
    cfg.seed = rng.next();
    cfg.decoy_fraction = 0.0;
    cfg.auth_rounds = symbols;
    comms::Session s(cfg);
    s.transcript().set_recording(false);
    auto tap = adversary::intercept_tap(params);
    s.uplink(tapped).attach(tap);
    s.authenticate_all();
    comms::send_message(s, random_bits(symbols * static_cast<std::size_t>(n), rng));
    std::size_t errors = 0;
    for (const auto& sym : s.transcript().symbols()) errors += sym.alarm || sym.decoded != sym.sent;
    const double rate = errors / double(symbols);
    const double sigma3 = oracle::three_sigma(0.5, symbols);
    const double acc = adversary::guess_accuracy(*tap, s.transcript(), static_cast<std::size_t>(tapped - 1));
    o.check(std::abs(rate - 0.5) <= sigma3 && acc <= 0.5 + sigma3,
            fmt::format("set {} ({} users, {}, u{} tapped): error rate {:.4f} (0.5 +- {:.4f}), "
                        "exact {:.4f}, guess accuracy {:.4f}",
                        set, n, comms::to_string(cfg.mode), tapped, rate, sigma3,
                        adversary::intercept_disturbance(params), acc));
  }
  double haar = 0.0;
  for (int t = 0; t < 1000; ++t) haar += adversary::intercept_disturbance(adversary::InterceptParams::haar(rng)) / 1000;
  o.note(fmt::format("sets are drawn from the Z-monitoring family, where the exact error is 1/2; "
                     "Haar-random unitaries average {:.3f}",
                     haar));
  return o;
}

Outcome core_properties() {
  Outcome o;
  Rng rng(909);
  const int cases = 1000;
  const Eigen::Matrix2cd pauli[] = {Eigen::Matrix2cd::Identity(), oracle::X(), oracle::Y(), oracle::Z()};

  std::size_t bad = 0;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(4));
    qcore::QubitAllocator ids;
    std::vector<QubitId> q;
    for (int k = 0; k < n; ++k) q.push_back(ids.allocate(PartyId::user(k + 1)));
    StateRegister r = qcore::random_state(q, rng);
    Eigen::VectorXcd ref = oracle::vec(r);
    for (int step = 0; step < 10; ++step) {
      const auto a = static_cast<int>(rng.below(n));
      auto b = static_cast<int>(rng.below(n - 1));
      if (b >= a) ++b;
      if (rng.bit()) {
        const auto op = static_cast<int>(rng.below(4));
        qcore::apply_pauli(r, q[a], static_cast<qcore::PauliOp>(op));
        ref = oracle::on1(pauli[op], a, n) * ref;
      } else {
        const bool c1 = rng.bit();
        qcore::apply_controlled(r, q[a], q[b], c1 ? qcore::ControlledOp::kC1 : qcore::ControlledOp::kC0);
        ref = oracle::on2(c1 ? oracle::cnot_x() : oracle::cnot(), a, b, n) * ref;
      }
    }
    bad += std::abs(r.norm() - 1.0) > 1e-9 || (oracle::vec(r) - ref).norm() > 1e-9;
  }
  o.check(bad == 0, fmt::format("norm preservation and dense agreement: {} of {} random circuits off", bad, cases));

  bad = 0;
  for (int c = 0; c < cases; ++c) {
    qcore::QubitAllocator ids;
    const std::vector<QubitId> q{ids.allocate(PartyId::user(1)), ids.allocate(PartyId::user(2)),
                                 ids.allocate(PartyId::user(3))};
    const StateRegister s = qcore::random_state(q, rng);
    StateRegister r = s;
    const auto a = rng.below(3), b = (a + 1 + rng.below(2)) % 3;
    const auto op = static_cast<qcore::PauliOp>(rng.below(4));
    qcore::apply_pauli(r, q[a], op);
    qcore::apply_pauli(r, q[a], op);
    // Y squares to -I with the real convention.
    const double sign = op == qcore::PauliOp::kY ? -1.0 : 1.0;
    bad += (oracle::vec(r) - sign * oracle::vec(s)).norm() > 1e-9;
    const auto cop = rng.bit() ? qcore::ControlledOp::kC1 : qcore::ControlledOp::kC0;
    r = s;
    qcore::apply_controlled(r, q[a], q[b], cop);
    qcore::apply_controlled(r, q[a], q[b], cop);
    bad += (oracle::vec(r) - oracle::vec(s)).norm() > 1e-9;
  }
  o.check(bad == 0, fmt::format("gate self-inverses: {} of {} cases off", bad, 2 * cases));

  bad = 0;
  for (int c = 0; c < cases; ++c) {
    qcore::QubitAllocator ids;
    std::vector<QubitId> q;
    for (int k = 0; k < 4; ++k) q.push_back(ids.allocate(PartyId::user(k + 1)));
    const StateRegister s = qcore::random_state(q, rng);
    const std::vector<QubitId> one{q[rng.below(4)]};
    const std::vector<QubitId> two{q[0], q[3]};
    const double sums[] = {
        [&] { const auto p = qcore::outcome_probabilities(s, one, qcore::MeasurementBasis::z()); return p[0] + p[1]; }(),
        [&] { const auto p = qcore::outcome_probabilities(s, one, qcore::MeasurementBasis::x()); return p[0] + p[1]; }(),
        [&] { const auto p = qcore::outcome_probabilities(s, two, qcore::MeasurementBasis::bell()); return std::accumulate(p.begin(), p.end(), 0.0); }(),
    };
    for (double v : sums) bad += std::abs(v - 1.0) > 1e-9;
  }
  o.check(bad == 0, fmt::format("measurement completeness (Z, X, Bell): {} of {} sums off", bad, 3 * cases));

  bad = 0;
  double gram = 0.0;
  for (int k = 2; k <= 6; ++k) {
    Eigen::MatrixXcd b(std::size_t{1} << k, std::size_t{1} << k);
    for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
      const auto g = qcore::ghz_outcome_from_index(k, i);
      b.col(static_cast<Eigen::Index>(i)) = oracle::ghz_basis(k, g.pattern, g.minus);
    }
    gram = std::max(gram, (b.adjoint() * b - Eigen::MatrixXcd::Identity(b.cols(), b.cols())).norm());
  }
  for (int c = 0; c < cases; ++c) {
    const int k = 2 + static_cast<int>(rng.below(5));
    qcore::QubitAllocator ids;
    std::vector<QubitId> q;
    for (int j = 0; j < k; ++j) q.push_back(ids.allocate(PartyId::user(j + 1)));
    const StateRegister s = qcore::random_state(q, rng);
    const auto p = qcore::outcome_probabilities(s, q, qcore::MeasurementBasis::ghz(k));
    double oracle_sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto g = qcore::ghz_outcome_from_index(k, i);
      const double ref = std::norm(oracle::ghz_basis(k, g.pattern, g.minus).dot(oracle::vec(s)));
      bad += std::abs(ref - p[i]) > 1e-9;
      oracle_sum += ref;
    }
    bad += std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0) > 1e-9 || std::abs(oracle_sum - 1.0) > 1e-9;
  }
  o.check(bad == 0 && gram < 1e-9,
          fmt::format("GHZ-basis completeness: {} of {} cases off, basis Gram error {:.1e}", bad, cases, gram));

  bad = 0;
  for (int c = 0; c < cases; ++c) {
    const std::uint64_t seed = rng.next();
    auto trace = [&](std::uint64_t sd) {
      Rng r(sd);
      qcore::QubitAllocator ids;
      std::vector<QubitId> q;
      for (int j = 0; j < 3; ++j) q.push_back(ids.allocate(PartyId::user(j + 1)));
      StateRegister s = qcore::random_state(q, r);
      std::vector<std::size_t> out{qcore::ghz_index(qcore::measure_ghz(s, q, r))};
      out.push_back(static_cast<std::size_t>(qcore::measure_z(s, q[0], r)));
      out.push_back(static_cast<std::size_t>(qcore::measure_x(s, q[1], r)));
      return std::make_pair(out, oracle::vec(s));
    };
    const auto a = trace(seed), b = trace(seed);
    bad += a.first != b.first || (a.second - b.second).norm() != 0.0;
  }
  o.check(bad == 0, fmt::format("seed determinism: {} of {} replays differ", bad, cases));
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "worked example 100111, both modes", 1.0, worked_example},
      {"AC2", "exhaustive round trips, 2 and 3 users", 10.0, round_trip_exhaustive},
      {"AC3", "N-user round trips, N = 4, 5, 6", 120.0, n_user_generalization},
      {"AC4", "decode-table conformance", 5.0, table_conformance},
      {"AC5", "masquerade detection", 60.0, masquerade_detection},
      {"AC6", "one-way Holevo bound", 1.0, one_way_holevo},
      {"AC7", "two-way closed forms", 1.0, two_way_closed_forms},
      {"AC8", "GHZ intercept", 60.0, ghz_intercept},
      {"AC9", "quantum-core properties", 30.0, core_properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    fmt::print("{} {}  {}  ({:.2f} s, budget {:g} s{})\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
               c.budget_s, in_time ? "" : ", over budget");
    for (const auto& l : o.lines) fmt::print("    {}\n", l);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
