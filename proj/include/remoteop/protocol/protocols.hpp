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

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "remoteop/core/gate_matrix.hpp"
#include "remoteop/core/measurement.hpp"
#include "remoteop/core/state_vector.hpp"
#include "remoteop/protocol/outcomes.hpp"
#include "remoteop/protocol/resources.hpp"
#include "remoteop/protocol/session.hpp"
#include "remoteop/protocol/transcript.hpp"
#include "remoteop/restricted/restricted_operation.hpp"

namespace remoteop {

// Where the N + M qudits start out.
//   Split:       B_1..B_N at Bob, A_1..A_M at Alice.
//   BobHoldsAll: all N + M at Bob; Alice returns the A qudits.
//   MZero:       M = 0, B_1..B_N at Bob.
enum class RemoteCase { Split, BobHoldsAll, MZero };

std::string_view case_name(RemoteCase c);
std::optional<RemoteCase> parse_case(std::string_view text);

struct BranchRun {
  std::vector<MeasurementOutcome> outcomes;  // qudits are session ids
  StateVector state;                         // final state, input qudit order
  Transcript transcript;
  ResourceVector ledger;
};

struct ProtocolResult {
  std::vector<BranchRun> branches;
  // Identical across branches for every protocol here.
  const ResourceVector& ledger() const { return branches.front().ledger; }
};

struct RunOptions {
  bool record_snapshots = false;
};

/// Alice applies U(f, G) to qudits B_1..B_N A_1..A_M without shared
/// entanglement. Bob only knows f.
///
///   1. Bob prepares C_1..C_N in |0> and applies the generalized CNOT
///      B_i -> C_i, copying the B labels into C.
///   2. Bob sends C (and, in BobHoldsAll, A) to Alice.
///   3. Alice applies U(f, G) to C_1..C_N A_1..A_M.
///   4. Alice Fourier-transforms each C_i, measures C jointly, and drops
///      the now product-state ancillas.
///   5. Alice (returns A in BobHoldsAll and) sends the outcome k in
///      cbits_for_outcome(d, N) bits.
///   6. Bob applies V(f) to B, then S^{k_i} to each B_i.
///
/// Every branch ends in U(f, G)|input>. input holds N + M qudits in the
/// order B_1..B_N A_1..A_M.
///
/// Throws std::domain_error when the input shape does not match op or
/// MZero is used with M > 0.
ProtocolResult run_remote_restricted(const RestrictedOperation& op, RemoteCase remote_case,
                                     const StateVector& input, const OutcomePolicy& policy,
                                     const RunOptions& options = {});

// Ledger run_remote_restricted charges for the given shape.
ResourceVector expected_remote_cost(RemoteCase remote_case, int d, int n_perm, int m_block);

// Bob ships all N + M qudits to Alice, she applies op and ships them back.
ProtocolResult run_simple_swap(const RestrictedOperation& op, const StateVector& input);

struct TeleportResult {
  QuditId destination;  // receiver-held qubit now carrying the state
  ResourceVector delta;
};

// Standard one-qubit teleportation inside a session. The Bell pair is
// minted on demand (one ebit), the sender measures and sends two bits, the
// receiver corrects with X then Z. The destination inherits the source's
// name. Qubits only.
TeleportResult teleport(Session& session, Party source, QuditId qudit, OutcomeChooser& chooser);

// Bidirectional teleportation: every qubit teleported from Bob to Alice,
// op applied, every qubit teleported back. Qubits only.
ProtocolResult run_bqst(const RestrictedOperation& op, const StateVector& input,
                        const OutcomePolicy& policy = Sample{0});

/// Controlled-u with num_controls controls at Bob and the target at
/// Alice, without shared entanglement. input is B_1..B_n T.
///
/// Bob writes the AND of his controls into a fresh ancilla and sends it.
/// Alice uses it as the control of u, Hadamards and measures it, and sends
/// the bit. On 1 Bob applies a phase of -1 to the all-ones control string.
ProtocolResult run_yang_cu(int num_controls, const GateMatrix& u, const StateVector& input,
                           const OutcomePolicy& policy);

// Full-matrix product, independent of the strided gate kernels.
StateVector apply_full_matrix(const GateMatrix& full, const StateVector& input);

}  // namespace remoteop
