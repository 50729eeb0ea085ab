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

#include "remoteop/core/errors.hpp"
#include "remoteop/core/gates.hpp"
#include "remoteop/protocol/protocols.hpp"

namespace remoteop {

StateVector apply_full_matrix(const GateMatrix& full, const StateVector& input) {
  if (full.dim() != input.size()) {
    throw std::domain_error("apply_full_matrix: matrix dimension " + std::to_string(full.dim()) +
                            " does not match " + std::to_string(input.size()) + " amplitudes");
  }
  const auto amps = input.amplitudes();
  const Eigen::Map<const Eigen::VectorXcd> in(amps.data(), static_cast<Eigen::Index>(amps.size()));
  const Eigen::VectorXcd out = full.entries() * in;
  return StateVector(input.dim(), input.num_qudits(), std::vector<Complex>(out.data(), out.data() + out.size()));
}

namespace {

std::vector<std::string> operand_names(int n_perm, int m_block) {
  std::vector<std::string> names;
  for (int i = 0; i < n_perm; ++i) names.push_back("B" + std::to_string(i + 1));
  for (int i = 0; i < m_block; ++i) names.push_back("A" + std::to_string(i + 1));
  return names;
}

void require_operand(const RestrictedOperation& op, const StateVector& input, const char* who) {
  if (input.dim() != op.dim() || input.num_qudits() != op.total_qudits()) {
    throw std::domain_error(std::string(who) + ": input must hold " +
                            std::to_string(op.total_qudits()) + " qudits of dimension " +
                            std::to_string(op.dim()));
  }
}

}  // namespace

ProtocolResult run_simple_swap(const RestrictedOperation& op, const StateVector& input) {
  require_operand(op, input, "run_simple_swap");
  const int total = op.total_qudits();
  Session session(input, operand_names(op.n_perm(), op.m_block()),
                  std::vector<Party>(static_cast<std::size_t>(total), Party::Bob));
  std::vector<QuditId> reg;
  for (int i = 0; i < total; ++i) reg.push_back(i);

  session.begin_step(1, "Bob sends every qudit to Alice");
  session.send_qudits(Party::Bob, reg);
  session.begin_step(2, "Alice applies the operation");
  session.apply(Party::Alice, build_matrix(op), op.m_block() == 0 ? "U(f,phi)" : "U(f,G)", reg);
  session.begin_step(3, "Alice sends every qudit back");
  session.send_qudits(Party::Alice, reg);

  return ProtocolResult{{BranchRun{{}, session.state_of(reg), session.transcript(), session.ledger()}}};
}

TeleportResult teleport(Session& session, Party source, QuditId qudit, OutcomeChooser& chooser) {
  if (session.dim() != 2) throw UnsupportedError("teleport: only qubits can be teleported");
  if (session.owner(qudit) != source) {
    throw LocalityError("teleport: " + std::string(party_name(source)) + " does not hold " +
                        session.name(qudit));
  }
  const Party receiver = other(source);
  const ResourceVector before = session.ledger();
  const std::string name = session.name(qudit);

  const auto [kept, handed] = session.share_bell_pair(source, name + "/e_s", name + "/e_r");
  session.apply(source, generalized_cnot(2), "CNOT", {qudit, kept});
  session.apply(source, hadamard(), "H", {qudit});
  const QuditId measured[] = {qudit, kept};
  const MeasurementOutcome outcome = session.measure(source, measured, chooser);
  session.discard(source, qudit);
  session.discard(source, kept);
  const std::vector<bool> bits = encode_outcome(outcome.value, 2);
  session.send_bits(source, bits);

  if (bits[1]) session.apply(receiver, pauli_x(), "X", {handed});
  if (bits[0]) session.apply(receiver, pauli_z(), "Z", {handed});
  session.rename(handed, name);
  return TeleportResult{handed, session.ledger() - before};
}

ProtocolResult run_bqst(const RestrictedOperation& op, const StateVector& input,
                        const OutcomePolicy& policy) {
  if (op.dim() != 2) throw UnsupportedError("run_bqst: teleportation is modelled for qubits only");
  require_operand(op, input, "run_bqst");
  const int total = op.total_qudits();
  const GateMatrix full = build_matrix(op);

  auto run = [&](OutcomeChooser& chooser) {
    Session session(input, operand_names(op.n_perm(), op.m_block()),
                    std::vector<Party>(static_cast<std::size_t>(total), Party::Bob));
    std::vector<QuditId> reg;
    for (int i = 0; i < total; ++i) reg.push_back(i);
    std::vector<MeasurementOutcome> outcomes;

    session.begin_step(1, "Bob teleports every qubit to Alice");
    for (QuditId& q : reg) q = teleport(session, Party::Bob, q, chooser).destination;
    session.begin_step(2, "Alice applies the operation");
    session.apply(Party::Alice, full, op.m_block() == 0 ? "U(f,phi)" : "U(f,G)", reg);
    session.begin_step(3, "Alice teleports every qubit back");
    for (QuditId& q : reg) q = teleport(session, Party::Alice, q, chooser).destination;

    for (const Event& e : session.transcript().events()) {
      if (e.kind == EventKind::Measure) {
        outcomes.push_back(MeasurementOutcome{e.qudits, *e.outcome, *e.probability});
      }
    }
    return BranchRun{std::move(outcomes), session.state_of(reg), session.transcript(), session.ledger()};
  };
  return ProtocolResult{for_each_branch(policy, run)};
}

ProtocolResult run_yang_cu(int num_controls, const GateMatrix& u, const StateVector& input,
                           const OutcomePolicy& policy) {
  if (num_controls < 1) throw std::domain_error("run_yang_cu: need at least one control");
  if (u.dim() != 2) throw std::domain_error("run_yang_cu: u must be a one-qubit gate");
  if (input.dim() != 2 || input.num_qudits() != num_controls + 1) {
    throw std::domain_error("run_yang_cu: input must hold " + std::to_string(num_controls + 1) +
                            " qubits");
  }
  const GateMatrix fan_in = build_matrix(controlled_u(num_controls, pauli_x()));
  const GateMatrix controlled = build_matrix(controlled_u(1, u));
  const GateMatrix phase_fix =
      num_controls == 1 ? pauli_z() : build_matrix(controlled_u(num_controls - 1, pauli_z()));

  auto run = [&](OutcomeChooser& chooser) {
    std::vector<std::string> names;
    std::vector<Party> owners;
    for (int i = 0; i < num_controls; ++i) {
      names.push_back("B" + std::to_string(i + 1));
      owners.push_back(Party::Bob);
    }
    names.push_back("T");
    owners.push_back(Party::Alice);
    Session session(input, std::move(names), std::move(owners));
    std::vector<QuditId> controls;
    for (int i = 0; i < num_controls; ++i) controls.push_back(i);
    const QuditId target = num_controls;

    session.begin_step(1, "Bob computes the AND of his controls into an ancilla");
    const QuditId ancilla = session.prepare(Party::Bob, "C");
    std::vector<QuditId> fan_targets = controls;
    fan_targets.push_back(ancilla);
    session.apply(Party::Bob, fan_in, num_controls == 1 ? "CNOT" : "MCX", fan_targets);
    session.begin_step(2, "Bob sends the ancilla to Alice");
    session.send_qudits(Party::Bob, {ancilla});
    session.begin_step(3, "Alice applies u controlled by the ancilla");
    session.apply(Party::Alice, controlled, "CU", {ancilla, target});
    session.begin_step(4, "Alice measures the ancilla in the X basis");
    session.apply(Party::Alice, hadamard(), "H", {ancilla});
    const QuditId measured[] = {ancilla};
    const MeasurementOutcome outcome = session.measure(Party::Alice, measured, chooser);
    session.discard(Party::Alice, ancilla);
    session.begin_step(5, "Alice reports the outcome");
    session.send_bits(Party::Alice, encode_outcome(outcome.value, 1));
    session.begin_step(6, "Bob fixes the phase of the all-ones control string");
    if (outcome.value == 1) session.apply(Party::Bob, phase_fix, num_controls == 1 ? "Z" : "MCZ", controls);

    std::vector<QuditId> order = controls;
    order.push_back(target);
    return BranchRun{{outcome}, session.state_of(order), session.transcript(), session.ledger()};
  };
  return ProtocolResult{for_each_branch(policy, run)};
}

}  // namespace remoteop
