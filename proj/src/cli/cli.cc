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

#include "qsdc/cli/cli.h"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "qsdc/adversary/curves.h"
#include "qsdc/adversary/intercept.h"
#include "qsdc/adversary/masquerade.h"
#include "qsdc/adversary/one_way.h"
#include "qsdc/adversary/two_way.h"
#include "qsdc/comms/decode_table.h"
#include "qsdc/comms/message.h"
#include "qsdc/comms/reference_tables.h"
#include "qsdc/comms/session.h"
#include "qsdc/ghzfab/ghzfab.h"

namespace qsdc::cli {
namespace {

// Registers beyond this many users would exceed the qubit cap once an
// attacker ancilla is adjoined.
constexpr int kMaxUsers = 20;

void write_text(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  f << body;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string fmt_estimate(const Estimate& e) {
  return fmt::format("mean {:.4f}, 3sigma [{:.4f}, {:.4f}] over {}", e.mean,
                     e.mean - e.three_sigma, e.mean + e.three_sigma, e.count);
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const std::uint64_t seed = *cfg.seed;
  if (cfg.trials == 1) {
    comms::Transcript transcript;
    const TrialOutcome r = run_trial(cfg, seed, &transcript);
    out << fmt::format("users: {}  mode: {}  attack: {}  seed: {}\n", cfg.n_users,
                       comms::to_string(cfg.mode), to_string(cfg.attack), seed);
    for (const comms::Event& e : transcript.events()) {
      if (e.action == "auth_verdict") {
        out << fmt::format("auth {}: {} (error rate {:.4f} over {} rounds)\n",
                           e.payload.at("user").get<std::string>(),
                           e.payload.at("verdict").get<std::string>(),
                           e.payload.at("error_rate").get<double>(),
                           e.payload.at("rounds").get<std::size_t>());
      }
    }
    if (r.auth_terminated) {
      out << "session terminated during authentication\n";
    } else if (r.fabrication_fault) {
      out << "retained pairs failed the GHZ fabrication check; session aborted\n";
    } else {
      out << "sent:    " << r.sent << "\n";
      out << "decoded: " << r.decoded << "\n";
      out << fmt::format("symbol errors: {} of {}\n", r.symbol_errors, r.symbols);
      out << fmt::format("eavesdrop check: {} sampled, {} errors, rate {:.4f} -> {}\n",
                         r.check.sampled, r.check.errors, r.check.error_rate,
                         r.check.terminated ? "terminated" : "pass");
    }
    if (!cfg.out.empty()) write_text(cfg.out, transcript.dump() + "\n");
    return r.alarm() ? kExitAlarm : kExitOk;
  }

  std::vector<TrialOutcome> results(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(cfg.trials);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                      static_cast<unsigned>(cfg.trials)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cfg.trials; i = next++) {
        try {
          results[i] = run_trial(cfg, seed ^ i, nullptr);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::size_t terminated_auth = 0, fab = 0, checks_failed = 0, alarms = 0;
  std::size_t symbols = 0, symbol_errors = 0, guesses = 0, hits = 0;
  double auth_errors = 0.0;
  for (const TrialOutcome& r : results) {
    terminated_auth += r.auth_terminated;
    fab += r.fabrication_fault;
    checks_failed += r.check.terminated;
    alarms += r.alarm();
    symbols += r.symbols;
    symbol_errors += r.symbol_errors;
    guesses += r.guesses;
    hits += r.guess_hits;
    auth_errors += r.auth_error_rate * static_cast<double>(cfg.auth_rounds);
  }
  out << fmt::format("users: {}  mode: {}  attack: {}  seed: {}  trials: {}\n", cfg.n_users,
                     comms::to_string(cfg.mode), to_string(cfg.attack), seed, cfg.trials);
  out << "u1 auth error rate: "
      << fmt_estimate(binomial_estimate(static_cast<std::size_t>(std::llround(auth_errors)),
                                        cfg.trials * cfg.auth_rounds))
      << " rounds\n";
  out << fmt::format("authentication terminated: {} of {}\n", terminated_auth, cfg.trials);
  if (fab > 0) out << fmt::format("fabrication check failed: {} of {}\n", fab, cfg.trials);
  if (symbols > 0) {
    out << "symbol error rate: " << fmt_estimate(binomial_estimate(symbol_errors, symbols))
        << " symbols\n";
    out << fmt::format("eavesdrop check terminated: {} of {}\n", checks_failed, cfg.trials);
  }
  if (guesses > 0) {
    out << "attacker guess accuracy: " << fmt_estimate(binomial_estimate(hits, guesses))
        << " guesses\n";
  }
  return alarms > 0 ? kExitAlarm : kExitOk;
}

int cmd_curves(const std::string& dir, std::ostream& out) {
  adversary::write_curves(dir);
  bool ok = true;
  for (const adversary::SpotCheck& c : adversary::curve_spot_checks()) {
    ok = ok && c.pass();
    out << fmt::format("{:<44} expected {:<10.4g} got {:<12.6g} {}\n", c.label, c.expected,
                       c.actual, c.pass() ? "PASS" : "FAIL");
  }
  out << "wrote fig2a.csv fig2b.csv fig2c.csv fig2de.csv to " << dir << "\n";
  return ok ? kExitOk : kExitAlarm;
}

int cmd_tables(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  std::string report = "# decode table conformance\n";
  std::size_t mismatches = 0;
  for (int n : {2, 3}) {
    for (comms::Mode m : {comms::Mode::kPartial, comms::Mode::kFull}) {
      const comms::DecodeTable& t = comms::decode_table(m, n);
      write_text(std::filesystem::path(dir) / fmt::format("decode_{}_{}.tsv", comms::to_string(m), n),
                 comms::format_table(t));
      report += fmt::format("{} mode, {} users: {} rows\n", comms::to_string(m), n,
                            t.entries().size());
    }
    const auto& ref = n == 2 ? comms::reference_rows_2party() : comms::reference_rows_3party();
    const auto diff = comms::compare_with_reference(comms::decode_table(comms::Mode::kPartial, n), ref);
    mismatches += diff.size();
    report += fmt::format("partial mode, {} users vs published rows: {} of {} match\n", n,
                          ref.size() - diff.size(), ref.size());
    for (const comms::Mismatch& d : diff) {
      report += fmt::format("  MISMATCH pub {} meas {}: published {}, generated {}\n",
                            qcore::to_string(d.row.pub), d.row.ghz, d.row.bits,
                            d.generated.empty() ? "(none)" : d.generated);
    }
    const auto& partial = comms::decode_table(comms::Mode::kPartial, n).entries();
    const auto& full = comms::decode_table(comms::Mode::kFull, n).entries();
    bool same = partial.size() == full.size();
    for (std::size_t k = 0; same && k < partial.size(); ++k) {
      same = partial[k].bits == full[k].bits && partial[k].ghz == full[k].ghz &&
             partial[k].pub == full[k].pub;
    }
    report += fmt::format("full mode, {} users mirrors partial with server and receiver swapped: {}\n",
                          n, same ? "yes" : "no");
  }
  try {
    comms::build_decode_table(comms::Mode::kPartial, 4, comms::alternate_widths(4));
    report += "4 users, 2+2+1 framing: decodable\n";
  } catch (const comms::DecodeCollision& e) {
    report += fmt::format("4 users, 2+2+1 framing: not decodable ({})\n", e.what());
  }
  write_text(std::filesystem::path(dir) / "conformance.txt", report);
  out << report;
  return mismatches == 0 ? kExitOk : kExitAlarm;
}

}  // namespace

std::string to_string(Attack a) {
  switch (a) {
    case Attack::kNone:
      return "none";
    case Attack::kMasquerade:
      return "masquerade";
    case Attack::kOneWay:
      return "oneway";
    case Attack::kTwoWay:
      return "twoway";
    case Attack::kIntercept:
      return "intercept";
  }
  return "?";
}

Attack parse_attack(const std::string& s) {
  for (Attack a : {Attack::kNone, Attack::kMasquerade, Attack::kOneWay, Attack::kTwoWay,
                   Attack::kIntercept}) {
    if (s == to_string(a)) return a;
  }
  throw UsageError("unknown attack '" + s + "'");
}

void validate(const RunConfig& c) {
  if (c.n_users < 2 || c.n_users > kMaxUsers) {
    throw UsageError(fmt::format("--n-users must lie in [2, {}]", kMaxUsers));
  }
  for (char ch : c.message) {
    if (ch != '0' && ch != '1') throw UsageError("message must be bits or 0x hex");
  }
  if (!c.seed) throw UsageError("a seed is required (--seed or QSDC_SEED)");
  if (c.trials < 1) throw UsageError("--trials must be at least 1");
  if (c.auth_rounds < 1) throw UsageError("--auth-rounds must be at least 1");
  for (double f : {c.threshold, c.decoy_fraction, c.sample_fraction}) {
    if (!(f >= 0.0 && f <= 1.0)) throw UsageError("fractions and thresholds must lie in [0, 1]");
  }
  if (!(c.theta_eps >= 0.0 && c.theta_eps <= std::numbers::pi)) {
    throw UsageError("--theta-eps must lie in [0, pi]");
  }
  if (c.intercept_family != "zmonitor" && c.intercept_family != "haar") {
    throw UsageError("--intercept-family must be zmonitor or haar");
  }
}

TrialOutcome run_trial(const RunConfig& cfg, std::uint64_t seed, comms::Transcript* transcript) {
  const std::size_t bits = cfg.message.empty()
                               ? static_cast<std::size_t>(comms::symbol_width(cfg.n_users))
                               : cfg.message.size();
  comms::SessionConfig sc;
  sc.n_users = cfg.n_users;
  sc.mode = cfg.mode;
  sc.seed = seed;
  sc.auth_rounds = std::max(cfg.auth_rounds, comms::pairs_needed(bits, cfg.n_users, cfg.decoy_fraction));
  sc.auth_threshold = cfg.threshold;
  sc.decoy_fraction = cfg.decoy_fraction;
  comms::Session session(sc);
  session.transcript().set_recording(transcript != nullptr);

  std::string message = cfg.message;
  if (message.empty()) {
    message.resize(bits);
    for (auto& ch : message) ch = session.rng().bit() ? '1' : '0';
  }

  std::shared_ptr<adversary::InterceptTap> intercept;
  switch (cfg.attack) {
    case Attack::kNone:
      break;
    case Attack::kMasquerade:
      session.auth_channel(1).attach(
          adversary::masquerade_tap(adversary::MasqueradeParams::random(session.rng())));
      break;
    case Attack::kOneWay:
      session.auth_channel(1).attach(adversary::one_way_tap());
      break;
    case Attack::kTwoWay:
      session.auth_channel(1).attach(adversary::two_way_tap(cfg.theta_eps));
      break;
    case Attack::kIntercept: {
      const auto params = cfg.intercept_family == "haar"
                              ? adversary::InterceptParams::haar(session.rng())
                              : adversary::InterceptParams::z_monitor(session.rng());
      intercept = adversary::intercept_tap(params);
      session.uplink(1).attach(intercept);
      break;
    }
  }

  TrialOutcome r;
  r.sent = message;
  session.authenticate_all();
  r.auth_error_rate = session.auth_result(1)->error_rate;
  r.auth_terminated = session.any_terminated();
  if (!r.auth_terminated) {
    try {
      const comms::TransmissionResult tx = comms::send_message(session, message);
      r.decoded = tx.decoded;
      r.alarms = tx.alarms;
      for (const comms::SymbolRecord& s : session.transcript().symbols()) {
        ++r.symbols;
        if (s.alarm || s.decoded != s.sent) ++r.symbol_errors;
      }
      r.check = comms::eavesdrop_check(session.transcript(), cfg.sample_fraction, cfg.threshold,
                                       session.rng());
      if (intercept) {
        r.guesses = intercept->guesses().size();
        r.guess_hits = static_cast<std::size_t>(std::llround(
            adversary::guess_accuracy(*intercept, session.transcript(), 0) *
            static_cast<double>(r.guesses)));
      }
    } catch (const ghzfab::FabricationError&) {
      r.fabrication_fault = true;
    }
  }
  if (transcript) *transcript = session.transcript();
  return r;
}

Estimate binomial_estimate(std::size_t hits, std::size_t count) {
  Estimate e;
  e.count = count;
  if (count == 0) return e;
  e.mean = static_cast<double>(hits) / static_cast<double>(count);
  e.three_sigma = 3.0 * std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(count));
  return e;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"N-user quantum secure direct communication simulator"};
  app.set_config("--config", "", "TOML-style file mirroring the flags (flags win)");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "partial";
  std::string attack = "none";
  std::string message;
  std::uint64_t seed = 0;

  CLI::App* run = app.add_subcommand("run", "authenticate, transmit and check one or more sessions");
  run->add_option("--n-users", cfg.n_users, "number of users (>= 2); the last one receives");
  run->add_option("--mode", mode, "partial or full");
  run->add_option("--message", message, "bit string or 0x-prefixed hex");
  run->add_option("--attack", attack, "none, masquerade, oneway, twoway or intercept");
  run->add_option("--theta-eps", cfg.theta_eps, "two-way probe angle in [0, pi]");
  run->add_option("--intercept-family", cfg.intercept_family, "zmonitor or haar");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "64-bit session seed")->envname("QSDC_SEED");
  run->add_option("--trials", cfg.trials, "independent sessions, seeded seed xor index");
  run->add_option("--threshold", cfg.threshold, "error-rate threshold for both checks");
  run->add_option("--auth-rounds", cfg.auth_rounds, "handshake rounds per user (raised if needed)");
  run->add_option("--decoy-fraction", cfg.decoy_fraction, "share of symbols reserved as decoys");
  run->add_option("--sample-fraction", cfg.sample_fraction, "share of decoys revealed in the check");
  run->add_option("--out", cfg.out, "transcript JSON path (single trial)");

  std::string csv_dir = ".";
  CLI::App* curves = app.add_subcommand("curves", "write the two-way attack CSV tables");
  curves->add_option("--csv-dir", csv_dir, "output directory");

  std::string tables_dir = ".";
  CLI::App* tables = app.add_subcommand("tables", "generate decode tables and a conformance report");
  tables->add_option("--out", tables_dir, "output directory");

  std::vector<const char*> argv{"qsdc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) {
      cfg.mode = comms::parse_mode(mode);
      cfg.attack = parse_attack(attack);
      if (!message.empty()) cfg.message = comms::parse_message(message);
      if (seed_opt->count() > 0) cfg.seed = seed;
      return cmd_run(cfg, out);
    }
    if (curves->parsed()) return cmd_curves(csv_dir, out);
    if (tables->parsed()) return cmd_tables(tables_dir, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitAlarm;
  }
  return kExitUsage;
}

}  // namespace qsdc::cli
