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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "remoteop/accounting/tables.hpp"
#include "remoteop/core/gates.hpp"
#include "remoteop/core/rng.hpp"
#include "remoteop/protocol/protocols.hpp"
#include "remoteop/restricted/restricted_operation.hpp"
#include "support/oracle.hpp"

namespace {

using namespace remoteop;

constexpr double kStateTol = 1e-10;
constexpr double kMatrixTol = 1e-12;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what;
    ok = ok && cond;
  }
};

// Smallest b with 2^b >= d^n, by exact integer doubling.
std::uint64_t bits_needed(int d, int n) {
  std::uint64_t labels = 1;
  for (int i = 0; i < n; ++i) labels *= static_cast<std::uint64_t>(d);
  std::uint64_t b = 0;
  std::uint64_t reach = 1;
  while (reach < labels) {
    reach *= 2;
    ++b;
  }
  return b;
}

ResourceVector claimed_ledger(RemoteCase rc, int d, int n, int m) {
  ResourceVector r;
  r.cbits_a_to_b = bits_needed(d, n);
  if (rc == RemoteCase::BobHoldsAll) {
    r.qudits_b_to_a = static_cast<std::uint64_t>(n + m);
    r.qudits_a_to_b = static_cast<std::uint64_t>(m);
  } else {
    r.qudits_b_to_a = static_cast<std::uint64_t>(n);
  }
  return r;
}

std::string shape(int d, int n, int m, RemoteCase rc) {
  std::ostringstream os;
  os << "d=" << d << " N=" << n << " M=" << m << " " << case_name(rc);
  return os.str();
}

// AC1 and AC3 share the grid sweep.
struct GridResult {
  Check correctness;
  Check ledgers;
  std::size_t shapes = 0;
  std::size_t ops = 0;
  std::size_t branches = 0;
  double worst = 0.0;
  double seconds = 0.0;
};

GridResult sweep_grid() {
  GridResult g;
  const auto start = std::chrono::steady_clock::now();
  for (int d : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 0; m <= 1; ++m) {
        if (testing::ipow(d, 2 * n + m) > 4096) continue;
        for (RemoteCase rc : {RemoteCase::Split, RemoteCase::BobHoldsAll, RemoteCase::MZero}) {
          if (rc == RemoteCase::MZero && m != 0) continue;
          ++g.shapes;
          for (std::uint64_t trial = 0; trial < 20; ++trial) {
            const std::uint64_t seed = Rng::derive(static_cast<std::uint64_t>(d * 100 + n * 10 + m), trial);
            const RestrictedOperation op = random_restricted(seed, d, n, m);
            Rng rng(Rng::derive(seed, 1));
            const StateVector input = StateVector::random(rng, d, n + m);
            const StateVector want = testing::restricted_oracle(op, input);
            const ProtocolResult r = run_remote_restricted(op, rc, input, EnumerateAll{});
            ++g.ops;
            g.correctness.require(!r.branches.empty(),
                                  shape(d, n, m, rc) + ": no branches");
            for (const BranchRun& b : r.branches) {
              ++g.branches;
              const double dev = max_deviation(want, b.state);
              g.worst = std::max(g.worst, dev);
              g.correctness.require(dev < kStateTol, shape(d, n, m, rc) + " deviation");
              g.ledgers.require(b.ledger == claimed_ledger(rc, d, n, m), shape(d, n, m, rc) + " ledger");
            }
          }
        }
      }
    }
  }
  g.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return g;
}

Check ac2_branch_universality() {
  Check c;
  const RestrictedOperation op = random_restricted(0xAC2, 2, 3, 0);
  Rng rng(0xAC2);
  const StateVector input = StateVector::random(rng, 2, 3);
  const StateVector want = testing::restricted_oracle(op, input);
  std::vector<StateVector> finals;
  for (std::size_t k = 0; k < 8; ++k) {
    const ProtocolResult r =
        run_remote_restricted(op, RemoteCase::MZero, input, ForcedOutcomes(std::vector<std::size_t>{k}));
    c.require(r.branches.size() == 1 && r.branches[0].outcomes.front().value == k, "forced branch");
    finals.push_back(r.branches[0].state);
  }
  double worst = 0.0;
  for (const StateVector& s : finals) {
    worst = std::max(worst, max_deviation(finals.front(), s));
    c.require(max_deviation(want, s) < kStateTol, "branch differs from oracle");
  }
  c.require(worst < kStateTol, "branches differ");
  if (c.ok) c.detail << "8 forced branches, max pairwise deviation " << worst;
  return c;
}

struct Cells {
  const char* qubits;
  const char* cbits_q;
  const char* ebits;
  const char* cbits_s;
};

Check ac4_tables() {
  Check c;
  const Cells upper[] = {{"1", "2", "1", "2"}, {"N", "2N", "N", "2N"},
                         {"N+2M", "2N+4M", "N+2M", "2N+4M"}, {"N", "2N", "N", "2N"}};
  const Cells lower[] = {{"1", "1", "1", "3"}, {"N", "N", "N", "3N"},
                         {"N+2M", "N", "N+2M", "3N+4M"}, {"N", "N", "N", "3N"}};
  const Cells gaps[] = {{"", "1", "", "-1"}, {"", "N", "", "-N"}, {"", "N+4M", "", "-N"}, {"", "N", "", "-N"}};
  const std::vector<CostTable> tables = generate_tables();
  c.require(tables.size() == 4, "four tables");
  int cost_cells = 0;
  int gap_cells_checked = 0;
  auto cmp = [&](const RowCells& got, const Cells& want, const std::string& where, int& counter,
                 bool skip_blank) {
    const std::pair<const std::string*, const char*> pairs[] = {{&got.qubits, want.qubits},
                                                                {&got.cbits_qubit, want.cbits_q},
                                                                {&got.ebits, want.ebits},
                                                                {&got.cbits_shared, want.cbits_s}};
    for (const auto& [g, w] : pairs) {
      c.require(*g == w, where + ": got '" + *g + "', want '" + w + "'");
      if (!(skip_blank && std::string(w).empty())) ++counter;
    }
  };
  for (std::size_t t = 0; t < tables.size() && t < 4; ++t) {
    cmp(row_cells(tables[t].rows[0]), upper[t], tables[t].table_id + " upper", cost_cells, false);
    cmp(row_cells(tables[t].rows[1]), lower[t], tables[t].table_id + " lower", cost_cells, false);
    cmp(gap_cells(tables[t]), gaps[t], tables[t].table_id + " gap", gap_cells_checked, true);
  }
  if (c.ok) {
    c.detail << cost_cells << " protocol-cost cells and " << gap_cells_checked
             << " non-blank gap cells string-exact";
  }
  return c;
}

Check ac5_conversions() {
  Check c;
  const Affine N = Affine::N();
  const Affine M = Affine::M();
  auto qubit = [](Affine q, Affine cb) {
    AffineCost a;
    a.qudits_b_to_a = q;
    a.cbits_a_to_b = cb;
    return ScenarioCost(Scenario::QubitTransmission, a);
  };
  auto shared = [](Affine e, Affine cb) {
    AffineCost a;
    a.ebits = e;
    a.cbits_a_to_b = cb;
    return ScenarioCost(Scenario::SharedEntanglement, a);
  };
  const ScenarioCost s1 = to_shared_entanglement(qubit(Affine::value(1), Affine::value(1)));
  c.require(s1.cost().ebits == Affine::value(1) && s1.cost().total_cbits() == Affine::value(3), "(1,1)->(1,3)");
  const ScenarioCost sn = to_shared_entanglement(qubit(N, N));
  c.require(sn.cost().ebits == N && sn.cost().total_cbits() == 3 * N, "(N,N)->(N,3N)");

  Rng rng(0xAC5);
  auto draw = [&] {
    return Affine{static_cast<long>(rng.below(7)), static_cast<long>(rng.below(7)), static_cast<long>(rng.below(7))};
  };
  for (int i = 0; i < 200; ++i) {
    const Affine e = draw();
    const Affine cb = draw();
    const ScenarioCost q = to_qubit_transmission(shared(e, cb));
    c.require(q.cost().total_qudits() == e && q.cost().total_cbits() == cb, "(E,C)->(E,C)");
    const Affine qq = draw();
    const ScenarioCost s = to_shared_entanglement(qubit(qq, cb));
    c.require(s.cost().ebits == qq && s.cost().total_cbits() == cb + 2 * qq, "(Q,C)->(Q,C+2Q)");
  }

  // The six distinct published rows, converted from their native scenario
  // to the other column group.
  struct Row {
    ScenarioCost native;
    Affine other_first;
    Affine other_cbits;
  };
  auto shared_split = [](Affine e, Affine each_way) {
    AffineCost a;
    a.ebits = e;
    a.cbits_a_to_b = each_way;
    a.cbits_b_to_a = each_way;
    return ScenarioCost(Scenario::SharedEntanglement, a);
  };
  AffineCost ours_all;
  ours_all.qudits_b_to_a = N + M;
  ours_all.qudits_a_to_b = M;
  ours_all.cbits_a_to_b = N;
  const Row rows[] = {
      {shared_split(Affine::value(1), Affine::value(1)), Affine::value(1), Affine::value(2)},
      {qubit(Affine::value(1), Affine::value(1)), Affine::value(1), Affine::value(3)},
      {shared_split(N, N), N, 2 * N},
      {qubit(N, N), N, 3 * N},
      {shared_split(N + 2 * M, N + 2 * M), N + 2 * M, 2 * N + 4 * M},
      {ScenarioCost(Scenario::QubitTransmission, ours_all), N + 2 * M, 3 * N + 4 * M},
  };
  for (const Row& r : rows) {
    if (r.native.scenario() == Scenario::QubitTransmission) {
      const ScenarioCost s = to_shared_entanglement(r.native);
      c.require(s.cost().ebits == r.other_first && s.cost().total_cbits() == r.other_cbits,
                "published row " + to_string(r.other_first) + "," + to_string(r.other_cbits));
    } else {
      const ScenarioCost q = to_qubit_transmission(r.native);
      c.require(q.cost().total_qudits() == r.other_first && q.cost().total_cbits() == r.other_cbits,
                "published row " + to_string(r.other_first) + "," + to_string(r.other_cbits));
    }
  }
  if (c.ok) c.detail << "2 examples, 200 random costs, 6 published rows";
  return c;
}

Check ac6_baselines() {
  Check c;
  Rng rng(0xAC6);
  int runs = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int m = 0; m <= 1; ++m) {
      for (int trial = 0; trial < 3; ++trial) {
        const RestrictedOperation op = random_restricted(rng.next_u64(), 2, n, m);
        const StateVector input = StateVector::random(rng, 2, n + m);
        const StateVector want = testing::restricted_oracle(op, input);
        const auto nm = static_cast<std::uint64_t>(n + m);

        const ProtocolResult swap = run_simple_swap(op, input);
        ResourceVector swap_cost;
        swap_cost.qudits_b_to_a = nm;
        swap_cost.qudits_a_to_b = nm;
        c.require(max_deviation(want, swap.branches.front().state) < kStateTol, "simple swap state");
        c.require(swap.ledger() == swap_cost, "simple swap ledger");

        const ProtocolResult bq = run_bqst(op, input, Sample{rng.next_u64()});
        ResourceVector bq_cost;
        bq_cost.ebits = 2 * nm;
        bq_cost.cbits_a_to_b = 2 * nm;
        bq_cost.cbits_b_to_a = 2 * nm;
        c.require(max_deviation(want, bq.branches.front().state) < kStateTol, "bqst state");
        c.require(bq.ledger() == bq_cost, "bqst ledger");
        runs += 2;
      }
    }
  }
  ResourceVector yang_cost;
  yang_cost.qudits_b_to_a = 1;
  yang_cost.cbits_a_to_b = 1;
  for (int controls = 1; controls <= 3; ++controls) {
    for (int trial = 0; trial < 5; ++trial) {
      const GateMatrix u = haar_unitary(rng, 2);
      const StateVector input = StateVector::random(rng, 2, controls + 1);
      const StateVector want = testing::restricted_oracle(controlled_u(controls, u), input);
      const ProtocolResult r = run_yang_cu(controls, u, input, EnumerateAll{});
      c.require(r.branches.size() == 2, "yang branches");
      for (const BranchRun& b : r.branches) {
        c.require(max_deviation(want, b.state) < kStateTol, "yang state");
        c.require(b.ledger == yang_cost, "yang ledger");
      }
      ++runs;
    }
  }
  if (c.ok) c.detail << runs << " baseline runs";
  return c;
}

Check ac7_special_gates() {
  Check c;
  for (double phi : {0.0, 0.4, std::numbers::pi / 4, 2.5, -1.0}) {
    for (const RestrictedOperation& op : {u_diag(phi), u_anti(phi)}) {
      const auto back = classify(build_matrix(op), 2, 1, 0);
      c.require(back.has_value() && same_operation(op, *back, kMatrixTol), "U_diag/U_anti round trip");
    }
    Matrix anti = Matrix::Zero(2, 2);
    anti(0, 1) = std::polar(1.0, phi);
    anti(1, 0) = -std::polar(1.0, -phi);
    c.require(testing::max_abs_diff(build_matrix(u_anti(phi)).entries(), anti) < kMatrixTol, "U_anti entries");
  }
  const double h = 1.0 / std::sqrt(2.0);
  Matrix had(2, 2);
  had << h, h, h, -h;
  c.require(testing::max_abs_diff(qft(2).entries(), had) < 1e-15, "QFT(2) = H");
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  c.require(s_gate(2).entries() == z, "s_gate(2) = sigma_z exactly");
  for (int d = 2; d <= 9; ++d) {
    c.require(testing::max_abs_diff(s_gate(d).power(static_cast<unsigned>(d)).entries(), Matrix::Identity(d, d)) <
                  kMatrixTol,
              "s_gate(d)^d = I");
    const GateMatrix cnot = generalized_cnot(d);
    const Matrix& g = cnot.entries();
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      int ones = 0;
      for (Eigen::Index col = 0; col < g.cols(); ++col) {
        const Complex v = g(r, col);
        c.require(v == Complex(0.0, 0.0) || v == Complex(1.0, 0.0), "CNOT entries are 0/1");
        ones += v == Complex(1.0, 0.0);
      }
      c.require(ones == 1, "CNOT row has one 1");
    }
    for (Eigen::Index col = 0; col < g.cols(); ++col) {
      c.require(g.col(col).cwiseAbs().sum() == 1.0, "CNOT column has one 1");
    }
  }
  if (c.ok) c.detail << "U_diag/U_anti, QFT(2), s_gate, generalized_cnot for d=2..9";
  return c;
}

Check ac8_classification() {
  Check c;
  std::size_t ops = 0;
  for (int d : {2, 3}) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 0; m <= 1; ++m) {
        for (std::uint64_t i = 0; i < 100; ++i) {
          const RestrictedOperation op = random_restricted(Rng::derive(0xAC8, i * 64 + d * 8 + n * 2 + m), d, n, m);
          const auto back = classify(build_matrix(op), d, n, m);
          c.require(back.has_value(), "random op rejected");
          if (!back) continue;
          c.require(back->permutation() == op.permutation(), "f recovered exactly");
          c.require(same_operation(op, *back, kMatrixTol), "blocks within 1e-12");
          ++ops;
        }
      }
    }
  }
  c.require(!classify(hadamard(), 2, 1, 0).has_value(), "Hadamard rejected");
  Rng rng(0xAC8);
  for (int i = 0; i < 20; ++i) {
    const GateMatrix u = haar_unitary(rng, 4);
    c.require(!classify(u, 2, 2, 0).has_value() && !classify(u, 2, 1, 1).has_value(), "Haar unitary rejected");
  }
  if (c.ok) c.detail << ops << " round trips, Hadamard and 20 Haar unitaries rejected";
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const char* title, const Check& c) {
    std::printf("[%s] %s %s: %s\n", c.ok ? "PASS" : "FAIL", id, title, c.detail.str().c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  };

  GridResult grid = sweep_grid();
  if (grid.correctness.ok) {
    grid.correctness.detail << grid.shapes << " shapes, " << grid.ops << " ops, " << grid.branches
                            << " branches, worst deviation " << grid.worst << ", " << grid.seconds << " s";
  }
  grid.correctness.require(grid.seconds < 60.0, "runtime over 60 s");
  report("AC1", "protocol correctness", grid.correctness);
  report("AC2", "branch universality", ac2_branch_universality());
  if (grid.ledgers.ok) grid.ledgers.detail << grid.branches << " ledgers exact over " << grid.shapes << " shapes";
  report("AC3", "resource exactness", grid.ledgers);
  report("AC4", "table reproduction", ac4_tables());
  report("AC5", "conversion rules", ac5_conversions());
  report("AC6", "baseline correctness", ac6_baselines());
  report("AC7", "special-case gates", ac7_special_gates());
  report("AC8", "classification", ac8_classification());
  return failures == 0 ? 0 : 1;
}
