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

#include <stdexcept>
#include <string>

#include "remoteop/core/gates.hpp"
#include "remoteop/protocol/protocols.hpp"
#include "remoteop/restricted/permutation.hpp"

namespace remoteop {

std::string_view case_name(RemoteCase c) {
  switch (c) {
    case RemoteCase::Split: return "split";
    case RemoteCase::BobHoldsAll: return "bob-holds-all";
    case RemoteCase::MZero: return "mzero";
  }
  return "unknown";
}

std::optional<RemoteCase> parse_case(std::string_view text) {
  if (text == "split") return RemoteCase::Split;
  if (text == "bob-holds-all" || text == "bobholdsall" || text == "all") return RemoteCase::BobHoldsAll;
  if (text == "mzero" || text == "m0") return RemoteCase::MZero;
  return std::nullopt;
}

ResourceVector expected_remote_cost(RemoteCase remote_case, int d, int n_perm, int m_block) {
  ResourceVector r;
  r.cbits_a_to_b = static_cast<std::uint64_t>(cbits_for_outcome(d, n_perm));
  if (remote_case == RemoteCase::BobHoldsAll) {
    r.qudits_b_to_a = static_cast<std::uint64_t>(n_perm + m_block);
    r.qudits_a_to_b = static_cast<std::uint64_t>(m_block);
  } else {
    r.qudits_b_to_a = static_cast<std::uint64_t>(n_perm);
  }
  return r;
}

namespace {

std::string indexed(const char* prefix, int i) { return prefix + std::to_string(i + 1); }

struct GateSet {
  GateMatrix cnot;
  GateMatrix fourier;
  GateMatrix correction_perm;
  std::vector<GateMatrix> phase_powers;  // S^k, k = 0..d-1
  std::string cnot_label;
  std::string fourier_label;
};

GateSet gates_for(const RestrictedOperation& op) {
  const int d = op.dim();
  const GateMatrix s = s_gate(d);
  std::vector<GateMatrix> powers;
  for (int k = 0; k < d; ++k) powers.push_back(s.power(static_cast<unsigned>(k)));
  return GateSet{generalized_cnot(d),
                 qft(d),
                 permutation_gate(op.permutation()),
                 std::move(powers),
                 d == 2 ? "CNOT" : "GCNOT_" + std::to_string(d),
                 d == 2 ? "H" : "QFT_" + std::to_string(d)};
}

std::string phase_label(int d, int k) {
  if (d == 2) return "Z";
  return "S^" + std::to_string(k);
}

}  // namespace

ProtocolResult run_remote_restricted(const RestrictedOperation& op, RemoteCase remote_case,
                                     const StateVector& input, const OutcomePolicy& policy,
                                     const RunOptions& options) {
  const int d = op.dim();
  const int n = op.n_perm();
  const int m = op.m_block();
  if (input.dim() != d || input.num_qudits() != n + m) {
    throw std::domain_error("run_remote_restricted: input must hold " + std::to_string(n + m) +
                            " qudits of dimension " + std::to_string(d));
  }
  if (remote_case == RemoteCase::MZero && m != 0) {
    throw std::domain_error("run_remote_restricted: the M = 0 case needs an operation with M = 0");
  }

  const GateMatrix full = build_matrix(op);
  const GateSet gates = gates_for(op);
  const int message_bits = cbits_for_outcome(d, n);
  const std::string op_label = m == 0 ? "U(f,phi)" : "U(f,G)";

  auto run = [&](OutcomeChooser& chooser) {
    std::vector<std::string> names;
    std::vector<Party> owners;
    for (int i = 0; i < n; ++i) {
      names.push_back(indexed("B", i));
      owners.push_back(Party::Bob);
    }
    for (int i = 0; i < m; ++i) {
      names.push_back(indexed("A", i));
      owners.push_back(remote_case == RemoteCase::BobHoldsAll ? Party::Bob : Party::Alice);
    }
    Session session(input, std::move(names), std::move(owners));
    session.set_record_snapshots(options.record_snapshots);
    std::vector<QuditId> b_reg;
    std::vector<QuditId> a_reg;
    for (int i = 0; i < n; ++i) b_reg.push_back(i);
    for (int i = 0; i < m; ++i) a_reg.push_back(n + i);
    session.snapshot();

    session.begin_step(1, "Bob prepares ancillas and copies his labels into them");
    std::vector<QuditId> c_reg;
    for (int i = 0; i < n; ++i) c_reg.push_back(session.prepare(Party::Bob, indexed("C", i)));
    for (int i = 0; i < n; ++i) {
      session.apply(Party::Bob, gates.cnot, gates.cnot_label, {b_reg[static_cast<std::size_t>(i)],
                                                               c_reg[static_cast<std::size_t>(i)]});
    }
    session.snapshot();

    session.begin_step(2, "Bob sends the ancillas to Alice");
    std::vector<QuditId> shipped = c_reg;
    if (remote_case == RemoteCase::BobHoldsAll) shipped.insert(shipped.end(), a_reg.begin(), a_reg.end());
    session.send_qudits(Party::Bob, shipped);

    session.begin_step(3, "Alice applies the operation to the ancillas and her register");
    std::vector<QuditId> op_targets = c_reg;
    op_targets.insert(op_targets.end(), a_reg.begin(), a_reg.end());
    session.apply(Party::Alice, full, op_label, op_targets);
    session.snapshot();

    session.begin_step(4, "Alice Fourier-transforms and measures the ancillas");
    for (const QuditId c : c_reg) session.apply(Party::Alice, gates.fourier, gates.fourier_label, {c});
    const MeasurementOutcome outcome = session.measure(Party::Alice, c_reg, chooser);
    for (const QuditId c : c_reg) session.discard(Party::Alice, c);
    session.snapshot();

    session.begin_step(5, remote_case == RemoteCase::BobHoldsAll && m > 0
                              ? "Alice returns her operand qudits and reports the outcome"
                              : "Alice reports the outcome");
    if (remote_case == RemoteCase::BobHoldsAll && m > 0) session.send_qudits(Party::Alice, a_reg);
    const std::vector<bool> bits = encode_outcome(outcome.value, message_bits);
    session.send_bits(Party::Alice, bits);

    session.begin_step(6, "Bob applies V(f) and the phase corrections");
    std::size_t k = decode_outcome(bits);
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(k % static_cast<std::size_t>(d));
      k /= static_cast<std::size_t>(d);
    }
    session.apply(Party::Bob, gates.correction_perm, "V(f)", b_reg);
    for (int i = 0; i < n; ++i) {
      const int ki = digits[static_cast<std::size_t>(i)];
      if (ki != 0) {
        session.apply(Party::Bob, gates.phase_powers[static_cast<std::size_t>(ki)], phase_label(d, ki),
                      {b_reg[static_cast<std::size_t>(i)]});
      }
    }
    session.snapshot();

    std::vector<QuditId> order = b_reg;
    order.insert(order.end(), a_reg.begin(), a_reg.end());
    return BranchRun{{outcome}, session.state_of(order), session.transcript(), session.ledger()};
  };

  return ProtocolResult{for_each_branch(policy, run)};
}

}  // namespace remoteop
