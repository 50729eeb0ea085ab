// Copyright 2026 The remoteop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "remoteop/core/errors.hpp"
#include "remoteop/core/rng.hpp"
#include "remoteop/restricted/restricted_json.hpp"

namespace remoteop::cli {

using nlohmann::json;

namespace {

constexpr int kJsonVersion = 1;

std::optional<Format> parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

// d^e, saturating just above `limit` so huge shapes compare correctly.
std::uint64_t capped_power(int d, int e, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > limit) return v;
    v *= static_cast<std::uint64_t>(d);
  }
  return v;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << v;
  return os.str();
}

std::string ledger_summary(const ResourceVector& r) {
  std::ostringstream os;
  os << r.qudits_b_to_a << " qudits B->A, " << r.qudits_a_to_b << " qudits A->B, "
     << r.cbits_a_to_b << " cbits A->B, " << r.cbits_b_to_a << " cbits B->A, " << r.ebits
     << " ebits";
  return os.str();
}

json config_json(const RunConfig& c) {
  return json{{"d", c.d},
              {"N", c.n},
              {"M", c.m},
              {"case", std::string(case_name(c.remote_case))},
              {"seed", c.seed},
              {"trials", c.trials},
              {"policy", c.enumerate ? "enumerate" : "sample"},
              {"tolerance", c.tolerance}};
}

// Accepts a decimal number or [k]pi[/q], e.g. "0.5", "pi/4", "-3pi/8".
double parse_angle(const std::string& text) {
  const auto pos = text.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse angle '" + text + "'");
    }
    if (used != text.size()) throw ConfigError("cannot parse angle '" + text + "'");
    return v;
  }
  double k = 1.0;
  const std::string head = text.substr(0, pos);
  if (head == "-") {
    k = -1.0;
  } else if (!head.empty()) {
    k = parse_angle(head);
  }
  double q = 1.0;
  const std::string tail = text.substr(pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw ConfigError("cannot parse angle '" + text + "'");
    q = parse_angle(tail.substr(1));
    if (q == 0.0) throw ConfigError("angle divides by zero");
  }
  return k * std::numbers::pi / q;
}

struct OpChoice {
  RestrictedOperation op;
  std::string description;
};

OpChoice make_op(const std::string& text, const RunConfig& c) {
  auto need_single_qubit_phase = [&](const char* what) {
    if (c.d != 2 || c.n != 1 || c.m != 0) {
      throw ConfigError(std::string(what) + " needs --d 2 --n 1 --m 0");
    }
  };
  if (text == "random") {
    return {random_restricted(Rng::derive(c.seed, 0), c.d, c.n, c.m), "random"};
  }
  if (text == "identity") return {RestrictedOperation::identity(c.d, c.n, c.m), "identity"};
  if (text.rfind("diag:", 0) == 0) {
    need_single_qubit_phase("diag");
    return {u_diag(parse_angle(text.substr(5))), text};
  }
  if (text.rfind("anti:", 0) == 0) {
    need_single_qubit_phase("anti");
    return {u_anti(parse_angle(text.substr(5))), text};
  }
  if (text.rfind("file:", 0) == 0) {
    const std::string path = text.substr(5);
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    json doc;
    try {
      in >> doc;
    } catch (const json::exception& e) {
      throw ConfigError(path + ": " + e.what());
    }
    RestrictedOperation op = [&] {
      try {
        return restricted_from_json(doc);
      } catch (const std::domain_error& e) {
        throw ConfigError(path + ": " + e.what());
      }
    }();
    if (op.dim() != c.d || op.n_perm() != c.n || op.m_block() != c.m) {
      throw ConfigError(path + ": operation shape (d=" + std::to_string(op.dim()) +
                        ", N=" + std::to_string(op.n_perm()) + ", M=" +
                        std::to_string(op.m_block()) + ") does not match --d/--n/--m");
    }
    return {std::move(op), text};
  }
  throw ConfigError("unknown --op '" + text + "'");
}

// ---------------------------------------------------------------- verify

TrialReport run_trial(const RunConfig& c, int t) {
  TrialReport r;
  r.trial = t;
  r.seed = Rng::derive(c.seed, static_cast<std::uint64_t>(t));
  const RestrictedOperation op = random_restricted(Rng::derive(r.seed, 0), c.d, c.n, c.m);
  Rng input_rng(Rng::derive(r.seed, 1));
  const StateVector input = StateVector::random(input_rng, c.d, c.n + c.m);
  const StateVector expected = apply_full_matrix(build_matrix(op), input);

  OutcomePolicy policy = EnumerateAll{};
  if (!c.enumerate) policy = Sample{Rng::derive(r.seed, 2)};
  const ProtocolResult result = run_remote_restricted(op, c.remote_case, input, policy);

  r.branches = result.branches.size();
  r.ledger = result.ledger();
  const ResourceVector want = expected_remote_cost(c.remote_case, c.d, c.n, c.m);
  r.ledger_ok = true;
  for (const BranchRun& b : result.branches) {
    r.max_deviation = std::max(r.max_deviation, max_deviation(expected, b.state));
    if (!(b.ledger == want)) r.ledger_ok = false;
  }
  r.passed = r.ledger_ok && r.max_deviation < c.tolerance;
  return r;
}

void print_verify(const VerifyReport& report, Format format, std::ostream& out) {
  const RunConfig& c = report.config;
  if (format == Format::Json) {
    json trials = json::array();
    for (const TrialReport& t : report.trials) {
      trials.push_back({{"trial", t.trial},
                        {"seed", t.seed},
                        {"max_deviation", t.max_deviation},
                        {"branches", t.branches},
                        {"ledger", to_json(t.ledger)},
                        {"ledger_ok", t.ledger_ok},
                        {"pass", t.passed}});
    }
    json doc{{"version", kJsonVersion},
             {"command", "verify"},
             {"config", config_json(c)},
             {"expected_ledger", to_json(report.expected_ledger)},
             {"trials", std::move(trials)},
             {"pass", report.passed()}};
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    out << "trial,seed,max_deviation,branches,qudits_b_to_a,qudits_a_to_b,cbits_b_to_a,"
           "cbits_a_to_b,ebits,ledger_ok,pass\n";
    for (const TrialReport& t : report.trials) {
      out << t.trial << "," << t.seed << "," << format_double(t.max_deviation) << ","
          << t.branches << "," << t.ledger.qudits_b_to_a << "," << t.ledger.qudits_a_to_b << ","
          << t.ledger.cbits_b_to_a << "," << t.ledger.cbits_a_to_b << "," << t.ledger.ebits << ","
          << (t.ledger_ok ? 1 : 0) << "," << (t.passed ? 1 : 0) << "\n";
    }
    return;
  }
  out << "verify d=" << c.d << " N=" << c.n << " M=" << c.m << " case=" << case_name(c.remote_case)
      << " policy=" << (c.enumerate ? "enumerate" : "sample") << " seed=" << c.seed
      << " tolerance=" << format_double(c.tolerance) << "\n";
  out << "expected ledger: " << ledger_summary(report.expected_ledger) << "\n";
  std::size_t branches = 0;
  double worst = 0.0;
  for (const TrialReport& t : report.trials) {
    out << "  trial " << std::setw(3) << t.trial << "  max|dev| " << format_double(t.max_deviation)
        << "  branches " << std::setw(3) << t.branches << "  ledger "
        << (t.ledger_ok ? "ok" : "MISMATCH (" + ledger_summary(t.ledger) + ")") << "  "
        << (t.passed ? "PASS" : "FAIL") << "\n";
    branches += t.branches;
    worst = std::max(worst, t.max_deviation);
  }
  out << (report.passed() ? "PASS" : "FAIL") << ": " << report.trials.size() << " trials, "
      << branches << " branches, worst deviation " << format_double(worst) << "\n";
}

// ---------------------------------------------------------------- tables

struct CrossCheck {
  std::string table_id;
  std::string protocol;
  std::string status;  // "match", "mismatch", "skipped"
  std::string note;
  ResourceVector expected;
  ResourceVector measured;
};

std::vector<CrossCheck> cross_check(const std::vector<CostTable>& tables, const EvalPoint& at,
                                    std::uint64_t cap) {
  std::vector<CrossCheck> checks;
  const int n = static_cast<int>(at.n);
  const int m = static_cast<int>(at.m);
  const std::uint64_t seed = 7;
  for (const CostTable& table : tables) {
    const ProtocolRow& row = table.rows.back();
    CrossCheck check{table.table_id, row.id, "skipped", "", {}, {}};
    std::optional<ProtocolResult> result;
    StateVector expected = StateVector::basis(2, 1, 0);
    const long m_eval = table.table_id == "table1" || table.table_id == "table4" ? 0 : at.m;
    try {
      check.expected = row.qubit_transmission.cost().evaluate(at.n, m_eval);
    } catch (const std::domain_error& e) {
      check.note = e.what();
      checks.push_back(std::move(check));
      continue;
    }

    if (table.table_id == "table1") {
      // CU(N-1,1): N-1 controls plus the target and Bob's ancilla.
      if (n < 2) {
        check.note = "needs N >= 2";
      } else if (capped_power(2, n + 1, cap) > cap) {
        check.note = "above the amplitude cap";
      } else {
        Rng rng(seed);
        const GateMatrix u = haar_unitary(rng, 2);
        const StateVector input = StateVector::random(rng, 2, n);
        expected = apply_full_matrix(build_matrix(controlled_u(n - 1, u)), input);
        result = run_yang_cu(n - 1, u, input, Sample{seed});
      }
    } else {
      const RemoteCase rc = table.table_id == "table2"   ? RemoteCase::Split
                            : table.table_id == "table3" ? RemoteCase::BobHoldsAll
                                                         : RemoteCase::MZero;
      const int mm = rc == RemoteCase::MZero ? 0 : m;
      if (capped_power(2, 2 * n + mm, cap) > cap) {
        check.note = "above the amplitude cap";
      } else {
        const RestrictedOperation op = random_restricted(seed, 2, n, mm);
        Rng rng(Rng::derive(seed, 1));
        const StateVector input = StateVector::random(rng, 2, n + mm);
        expected = apply_full_matrix(build_matrix(op), input);
        result = run_remote_restricted(op, rc, input, Sample{seed});
      }
    }
    if (result) {
      check.measured = result->ledger();
      const bool state_ok = max_deviation(expected, result->branches.front().state) < 1e-10;
      check.status = check.measured == check.expected && state_ok ? "match" : "mismatch";
      if (!state_ok) check.note = "final state differs from the oracle";
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

std::string csv_with_view(const std::string& csv, const std::string& view) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) out << view << "," << line << "\n";
  return out.str();
}

int cmd_tables(Format format, const std::optional<std::string>& eval_text, std::ostream& out) {
  const std::vector<CostTable> tables = generate_tables();
  std::optional<EvalPoint> at;
  if (eval_text) at = parse_eval(*eval_text);
  std::vector<CrossCheck> checks;
  if (at) checks = cross_check(tables, *at, amplitude_cap());
  const bool ok = std::none_of(checks.begin(), checks.end(),
                               [](const CrossCheck& c) { return c.status == "mismatch"; });

  if (format == Format::Json) {
    json doc{{"version", kJsonVersion}, {"command", "tables"}, {"tables", tables_to_json(tables)}};
    if (at) {
      json cj = json::array();
      for (const CrossCheck& c : checks) {
        json entry{{"table_id", c.table_id}, {"protocol", c.protocol}, {"status", c.status},
                   {"expected", to_json(c.expected)}};
        if (c.status != "skipped") entry["measured"] = to_json(c.measured);
        if (!c.note.empty()) entry["note"] = c.note;
        cj.push_back(std::move(entry));
      }
      doc["evaluated"] = {{"N", at->n}, {"M", at->m}, {"tables", tables_to_json(tables, at)}};
      doc["cross_checks"] = std::move(cj);
    }
    out << doc.dump(2) << "\n";
  } else if (format == Format::Csv) {
    out << "view,table_id,protocol,qubits,cbits_qubit_transmission,ebits,"
           "cbits_shared_entanglement\n";
    out << csv_with_view(render_tables_csv(tables), "symbolic");
    if (at) {
      const std::string view = "N=" + std::to_string(at->n) + ";M=" + std::to_string(at->m);
      out << csv_with_view(render_tables_csv(tables, at), view);
    }
  } else {
    out << render_tables_text(tables);
    if (at) {
      out << "\n" << render_tables_text(tables, at);
      out << "\nLive runs at d=2:\n";
      for (const CrossCheck& c : checks) {
        out << "  " << c.table_id << " " << c.protocol << ": " << c.status;
        if (c.status != "skipped") out << " (" << ledger_summary(c.measured) << ")";
        if (!c.note.empty()) out << " [" << c.note << "]";
        out << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- demo

struct DemoOptions {
  std::string op = "random";
  std::optional<std::size_t> forced;
  std::optional<std::string> save_op;
};

int cmd_demo(const RunConfig& c, const DemoOptions& options, std::ostream& out) {
  OpChoice choice = make_op(options.op, c);
  if (options.save_op) {
    std::ofstream file(*options.save_op);
    if (!file) throw ConfigError("cannot write " + *options.save_op);
    file << to_json(choice.op).dump(2) << "\n";
  }
  Rng input_rng(Rng::derive(c.seed, 1));
  const StateVector input = StateVector::random(input_rng, c.d, c.n + c.m);
  const StateVector expected = apply_full_matrix(build_matrix(choice.op), input);

  OutcomePolicy policy = Sample{Rng::derive(c.seed, 2)};
  if (options.forced) {
    if (*options.forced >= checked_power(c.d, c.n)) {
      throw ConfigError("--forced must be below d^N = " + std::to_string(checked_power(c.d, c.n)));
    }
    policy = ForcedOutcomes(std::vector<std::size_t>{*options.forced});
  }
  const ProtocolResult result = [&] {
    try {
      return run_remote_restricted(choice.op, c.remote_case, input, policy, RunOptions{true});
    } catch (const ImpossibleOutcome& e) {
      throw ConfigError(std::string("forced outcome has zero probability: ") + e.what());
    }
  }();
  const BranchRun& branch = result.branches.front();
  const double deviation = max_deviation(expected, branch.state);
  const bool ok = deviation < c.tolerance &&
                  branch.ledger == expected_remote_cost(c.remote_case, c.d, c.n, c.m);

  std::vector<std::string> names;
  for (int i = 0; i < c.n; ++i) names.push_back("B" + std::to_string(i + 1));
  for (int i = 0; i < c.m; ++i) names.push_back("A" + std::to_string(i + 1));

  if (c.format == Format::Json) {
    json outcomes = json::array();
    for (const MeasurementOutcome& o : branch.outcomes) {
      outcomes.push_back({{"value", o.value}, {"probability", o.probability}});
    }
    json doc{{"version", kJsonVersion},
             {"command", "demo"},
             {"config", config_json(c)},
             {"op", to_json(choice.op)},
             {"transcript", branch.transcript.to_json()},
             {"outcomes", std::move(outcomes)},
             {"ledger", to_json(branch.ledger)},
             {"max_deviation", deviation},
             {"verdict", ok ? "PASS" : "FAIL"}};
    out << doc.dump(2) << "\n";
  } else {
    out << "demo d=" << c.d << " N=" << c.n << " M=" << c.m << " case=" << case_name(c.remote_case)
        << " op=" << choice.description << "\n";
    out << "input: " << render_state(input, names) << "\n";
    out << branch.transcript.to_text();
    out << "final: " << render_state(branch.state, names) << "\n";
    out << "oracle: " << render_state(expected, names) << "\n";
    out << "ledger: " << ledger_summary(branch.ledger) << "\n";
    out << "max|dev| " << format_double(deviation) << "\n";
    out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

std::uint64_t amplitude_cap() {
  const char* env = std::getenv("REMOTEOP_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  std::uint64_t value = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw ConfigError(std::string("REMOTEOP_CAP must be a positive integer, got '") + env + "'");
  }
  return value;
}

void validate(const RunConfig& c, std::uint64_t cap) {
  if (c.d < 2) throw ConfigError("--d must be at least 2");
  if (c.n < 1) throw ConfigError("--n must be at least 1");
  if (c.m < 0) throw ConfigError("--m must be non-negative");
  if (c.trials < 1) throw ConfigError("--trials must be positive");
  if (!(c.tolerance > 0.0)) throw ConfigError("--tolerance must be positive");
  if (c.remote_case == RemoteCase::MZero && c.m != 0) {
    throw ConfigError("--case mzero needs --m 0");
  }
  const std::uint64_t size = capped_power(c.d, 2 * c.n + c.m, cap);
  if (size > cap) {
    std::ostringstream os;
    os << "d^(2N+M) = " << c.d << "^" << (2 * c.n + c.m);
    if (size <= std::uint64_t{1} << 62) {
      // Exact value when it is cheap to state.
      std::uint64_t exact = 1;
      bool fits = true;
      for (int i = 0; i < 2 * c.n + c.m && fits; ++i) {
        if (exact > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(c.d)) fits = false;
        exact *= static_cast<std::uint64_t>(c.d);
      }
      if (fits) os << " = " << exact;
    }
    os << " exceeds the amplitude cap " << cap << " (set REMOTEOP_CAP to raise it)";
    throw ConfigError(os.str());
  }
}

bool VerifyReport::passed() const {
  return std::all_of(trials.begin(), trials.end(), [](const TrialReport& t) { return t.passed; });
}

VerifyReport run_verify(const RunConfig& config) {
  VerifyReport report;
  report.config = config;
  report.expected_ledger = expected_remote_cost(config.remote_case, config.d, config.n, config.m);
  report.trials.resize(static_cast<std::size_t>(config.trials));

  // Trials are independent; each writes only its own slot, so the report
  // comes out in trial order whatever the scheduling.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(config.trials));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int t = static_cast<int>(w); t < config.trials; t += static_cast<int>(workers)) {
          report.trials[static_cast<std::size_t>(t)] = run_trial(config, t);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

EvalPoint parse_eval(const std::string& text) {
  EvalPoint at{};
  bool have_n = false;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--eval expects N=..,M=.., got '" + text + "'");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size() || v < 0) {
      throw ConfigError("--eval: bad value '" + val + "' for " + key);
    }
    if (key == "N" || key == "n") {
      at.n = v;
      have_n = true;
    } else if (key == "M" || key == "m") {
      at.m = v;
    } else {
      throw ConfigError("--eval: unknown key '" + key + "'");
    }
  }
  if (!have_n) throw ConfigError("--eval needs N=..");
  if (at.n < 1) throw ConfigError("--eval needs N >= 1");
  return at;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-free remote restricted operations: simulator and cost tables"};
  app.name(args.empty() ? "remoteop" : args.front());
  app.require_subcommand(1);

  RunConfig config;
  std::string case_text = "split";
  std::string policy_text = "sample";
  std::string format_text = "text";
  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--d", config.d, "Qudit dimension")->capture_default_str();
    sub->add_option("--n", config.n, "Qudits in the permuted register (Bob)")->capture_default_str();
    sub->add_option("--m", config.m, "Qudits in the block register")->capture_default_str();
    sub->add_option("--case", case_text, "split | bob-holds-all | mzero")->capture_default_str();
    sub->add_option("--seed", config.seed, "64-bit seed")->capture_default_str();
    sub->add_option("--tolerance", config.tolerance, "Max amplitude deviation")
        ->capture_default_str();
  };

  CLI::App* verify = app.add_subcommand("verify", "Check random operations against the dense oracle");
  add_shape(verify);
  verify->add_option("--trials", config.trials, "Random operations to run")->capture_default_str();
  verify->add_option("--policy", policy_text, "sample | enumerate")->capture_default_str();
  verify->add_option("--format", format_text, "text | json | csv")->capture_default_str();

  CLI::App* tables = app.add_subcommand("tables", "Print the communication-cost tables");
  std::optional<std::string> eval_text;
  tables->add_option("--format", format_text, "text | json | csv")->capture_default_str();
  tables->add_option("--eval", eval_text, "Evaluate at N=..,M=.. and cross-check live runs");

  CLI::App* demo = app.add_subcommand("demo", "Print a step-by-step protocol transcript");
  DemoOptions demo_options;
  add_shape(demo);
  demo->add_option("--op", demo_options.op,
                   "random | identity | diag:PHI | anti:PHI | file:PATH")
      ->capture_default_str();
  demo->add_option("--forced", demo_options.forced, "Force the joint measurement outcome k");
  demo->add_option("--save-op", demo_options.save_op, "Write the operation as JSON");
  demo->add_option("--format", format_text, "text | json")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("remoteop");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const std::optional<Format> format = parse_format(format_text);
    if (!format) throw ConfigError("unknown --format '" + format_text + "'");
    config.format = *format;

    if (tables->parsed()) return cmd_tables(config.format, eval_text, out);

    const std::optional<RemoteCase> rc = parse_case(case_text);
    if (!rc) throw ConfigError("unknown --case '" + case_text + "'");
    config.remote_case = *rc;
    if (policy_text != "sample" && policy_text != "enumerate") {
      throw ConfigError("unknown --policy '" + policy_text + "'");
    }
    config.enumerate = policy_text == "enumerate";
    validate(config, amplitude_cap());

    if (verify->parsed()) {
      const VerifyReport report = run_verify(config);
      print_verify(report, config.format, out);
      return report.passed() ? kExitOk : kExitFailed;
    }
    if (config.format == Format::Csv) throw ConfigError("demo supports text and json output");
    return cmd_demo(config, demo_options, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace remoteop::cli
