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

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "remoteop/core/gate_matrix.hpp"
#include "remoteop/core/measurement.hpp"
#include "remoteop/core/state_vector.hpp"
#include "remoteop/protocol/outcomes.hpp"
#include "remoteop/protocol/resources.hpp"
#include "remoteop/protocol/transcript.hpp"

namespace remoteop {

struct QuditTransfer {
  std::vector<QuditId> qudits;
};
struct ClassicalBits {
  std::vector<bool> bits;
};

struct Message {
  Party sender;
  std::variant<QuditTransfer, ClassicalBits> payload;
};

/// One global state vector shared by Alice and Bob, with every qudit tagged
/// by its current holder. Each action is checked for locality, metered, and
/// appended to the transcript.
class Session {
 public:
  // names[i] and owners[i] describe qudit i of `initial`; it gets id i.
  Session(StateVector initial, std::vector<std::string> names, std::vector<Party> owners);

  int dim() const { return state_.dim(); }
  const StateVector& state() const { return state_; }
  const Transcript& transcript() const { return transcript_; }
  const ResourceVector& ledger() const { return ledger_; }

  Party owner(QuditId q) const;
  const std::string& name(QuditId q) const;
  bool is_live(QuditId q) const;
  std::vector<QuditId> live_qudits() const;

  // Adds Snapshot events after each step when enabled.
  void set_record_snapshots(bool on) { record_snapshots_ = on; }
  void begin_step(int step, std::string title);
  void snapshot();

  QuditId prepare(Party party, std::string name);

  // `holder` prepares (|00> + |11>)/sqrt2 on two fresh qubits, keeps the
  // first and hands the second to the other party. Charged as one ebit.
  std::pair<QuditId, QuditId> share_bell_pair(Party holder, std::string kept_name,
                                              std::string handed_name);

  void apply(Party party, const GateMatrix& gate, std::string label,
             std::span<const QuditId> targets);
  void apply(Party party, const GateMatrix& gate, std::string label,
             std::initializer_list<QuditId> targets) {
    apply(party, gate, std::move(label), std::span<const QuditId>(targets.begin(), targets.size()));
  }

  MeasurementOutcome measure(Party party, std::span<const QuditId> targets,
                             OutcomeChooser& chooser);

  void send(const Message& message);
  void send_qudits(Party sender, std::vector<QuditId> qudits) {
    send(Message{sender, QuditTransfer{std::move(qudits)}});
  }
  void send_bits(Party sender, std::vector<bool> bits) {
    send(Message{sender, ClassicalBits{std::move(bits)}});
  }

  // Removes a measured (product-state) qudit from the register.
  void discard(Party party, QuditId q);

  void rename(QuditId q, std::string name);

  // State of the listed qudits in the listed order. Every live qudit must
  // be listed.
  StateVector state_of(std::span<const QuditId> order) const;

 private:
  struct Slot {
    std::string name;
    Party owner;
    bool live;
  };

  int position_of(QuditId q) const;
  std::vector<int> positions_for(Party party, std::span<const QuditId> targets,
                                 std::string_view action) const;
  void record(Event event);

  StateVector state_;
  std::vector<Slot> slots_;           // indexed by QuditId
  std::vector<QuditId> position_ids_; // qudit id at each state position
  Transcript transcript_;
  ResourceVector ledger_;
  int step_ = 0;
  bool record_snapshots_ = false;
};

// Amplitude listing of the largest entries, labelled by qudit names.
std::string render_state(const StateVector& state, const std::vector<std::string>& names,
                         std::size_t max_terms = 8);

}  // namespace remoteop
