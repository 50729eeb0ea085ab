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

#include "remoteop/protocol/session.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "remoteop/core/errors.hpp"

namespace remoteop {

Session::Session(StateVector initial, std::vector<std::string> names, std::vector<Party> owners)
    : state_(std::move(initial)) {
  const auto n = static_cast<std::size_t>(state_.num_qudits());
  if (names.size() != n || owners.size() != n) {
    throw std::domain_error("Session: need one name and one owner per qudit");
  }
  for (std::size_t i = 0; i < n; ++i) {
    slots_.push_back(Slot{std::move(names[i]), owners[i], true});
    position_ids_.push_back(static_cast<QuditId>(i));
  }
}

Party Session::owner(QuditId q) const {
  if (!is_live(q)) throw std::domain_error("qudit " + std::to_string(q) + " is not live");
  return slots_[static_cast<std::size_t>(q)].owner;
}

const std::string& Session::name(QuditId q) const {
  if (q < 0 || static_cast<std::size_t>(q) >= slots_.size()) {
    throw std::domain_error("unknown qudit id " + std::to_string(q));
  }
  return slots_[static_cast<std::size_t>(q)].name;
}

bool Session::is_live(QuditId q) const {
  return q >= 0 && static_cast<std::size_t>(q) < slots_.size() &&
         slots_[static_cast<std::size_t>(q)].live;
}

std::vector<QuditId> Session::live_qudits() const { return position_ids_; }

int Session::position_of(QuditId q) const {
  const auto it = std::find(position_ids_.begin(), position_ids_.end(), q);
  if (it == position_ids_.end()) throw std::domain_error("qudit " + std::to_string(q) + " is not live");
  return static_cast<int>(it - position_ids_.begin());
}

std::vector<int> Session::positions_for(Party party, std::span<const QuditId> targets,
                                        std::string_view action) const {
  std::vector<int> positions;
  positions.reserve(targets.size());
  for (const QuditId q : targets) {
    if (!is_live(q)) {
      throw LocalityError(std::string(party_name(party)) + " cannot " + std::string(action) +
                          " qudit " + std::to_string(q) + ": it is not live");
    }
    const Slot& slot = slots_[static_cast<std::size_t>(q)];
    if (slot.owner != party) {
      throw LocalityError(std::string(party_name(party)) + " cannot " + std::string(action) + " " +
                          slot.name + ": it is held by " + std::string(party_name(slot.owner)));
    }
    positions.push_back(position_of(q));
  }
  return positions;
}

void Session::record(Event event) {
  event.step = step_;
  event.ledger = ledger_;
  for (const QuditId q : event.qudits) event.names.push_back(name(q));
  transcript_.push(std::move(event));
}

void Session::begin_step(int step, std::string title) {
  step_ = step;
  Event e;
  e.kind = EventKind::Step;
  e.label = std::move(title);
  record(std::move(e));
}

void Session::snapshot() {
  if (!record_snapshots_) return;
  std::vector<std::string> names;
  for (const QuditId q : position_ids_) names.push_back(name(q));
  Event e;
  e.kind = EventKind::Snapshot;
  e.label = render_state(state_, names);
  record(std::move(e));
}

QuditId Session::prepare(Party party, std::string qudit_name) {
  state_ = state_.tensor(StateVector::basis(state_.dim(), 1, 0));
  const auto id = static_cast<QuditId>(slots_.size());
  slots_.push_back(Slot{std::move(qudit_name), party, true});
  position_ids_.push_back(id);
  Event e;
  e.party = party;
  e.kind = EventKind::Prepare;
  e.qudits = {id};
  record(std::move(e));
  return id;
}

std::pair<QuditId, QuditId> Session::share_bell_pair(Party holder, std::string kept_name,
                                                     std::string handed_name) {
  if (state_.dim() != 2) throw UnsupportedError("Bell pairs are only modelled for qubits");
  std::vector<Complex> bell(4);
  bell[0] = std::numbers::sqrt2 / 2.0;
  bell[3] = std::numbers::sqrt2 / 2.0;
  state_ = state_.tensor(StateVector(2, 2, std::move(bell)));
  const auto kept = static_cast<QuditId>(slots_.size());
  const QuditId handed = kept + 1;
  slots_.push_back(Slot{std::move(kept_name), holder, true});
  slots_.push_back(Slot{std::move(handed_name), other(holder), true});
  position_ids_.push_back(kept);
  position_ids_.push_back(handed);
  ledger_.ebits += 1;
  Event e;
  e.party = holder;
  e.kind = EventKind::EbitHalf;
  e.qudits = {kept, handed};
  record(std::move(e));
  return {kept, handed};
}

void Session::apply(Party party, const GateMatrix& gate, std::string label,
                    std::span<const QuditId> targets) {
  const std::vector<int> positions = positions_for(party, targets, "apply " + label + " to");
  state_.apply(gate, positions);
  Event e;
  e.party = party;
  e.kind = EventKind::Gate;
  e.label = std::move(label);
  e.qudits.assign(targets.begin(), targets.end());
  record(std::move(e));
}

MeasurementOutcome Session::measure(Party party, std::span<const QuditId> targets,
                                    OutcomeChooser& chooser) {
  const std::vector<int> positions = positions_for(party, targets, "measure");
  const std::vector<double> probs = outcome_probabilities(state_, positions);
  const std::size_t value = chooser.choose(probs);
  MeasuredBranch branch = collapse(state_, positions, value);
  state_ = std::move(branch.state);
  MeasurementOutcome outcome{std::vector<int>(targets.begin(), targets.end()), value,
                             branch.outcome.probability};
  Event e;
  e.party = party;
  e.kind = EventKind::Measure;
  e.qudits.assign(targets.begin(), targets.end());
  e.outcome = value;
  e.probability = outcome.probability;
  record(std::move(e));
  return outcome;
}

void Session::send(const Message& message) {
  Event e;
  e.party = message.sender;
  if (const auto* transfer = std::get_if<QuditTransfer>(&message.payload)) {
    positions_for(message.sender, transfer->qudits, "send");
    for (const QuditId q : transfer->qudits) slots_[static_cast<std::size_t>(q)].owner = other(message.sender);
    ledger_.add_qudits(message.sender, transfer->qudits.size());
    e.kind = EventKind::Transfer;
    e.qudits = transfer->qudits;
  } else {
    const auto& bits = std::get<ClassicalBits>(message.payload).bits;
    ledger_.add_cbits(message.sender, bits.size());
    e.kind = EventKind::Classical;
    for (const bool b : bits) e.bits.push_back(b ? '1' : '0');
  }
  record(std::move(e));
}

void Session::discard(Party party, QuditId q) {
  const QuditId targets[] = {q};
  const int position = positions_for(party, targets, "discard").front();
  state_ = state_.without_qudit(position);
  position_ids_.erase(position_ids_.begin() + position);
  Event e;
  e.party = party;
  e.kind = EventKind::Discard;
  e.qudits = {q};
  record(std::move(e));
  slots_[static_cast<std::size_t>(q)].live = false;
}

void Session::rename(QuditId q, std::string new_name) {
  if (!is_live(q)) throw std::domain_error("rename: qudit is not live");
  slots_[static_cast<std::size_t>(q)].name = std::move(new_name);
}

StateVector Session::state_of(std::span<const QuditId> order) const {
  if (order.size() != position_ids_.size()) {
    throw std::domain_error("state_of: " + std::to_string(position_ids_.size()) +
                            " qudits are live but " + std::to_string(order.size()) + " were listed");
  }
  std::vector<int> positions;
  positions.reserve(order.size());
  for (const QuditId q : order) positions.push_back(position_of(q));
  return state_.reordered(positions);
}

std::string render_state(const StateVector& state, const std::vector<std::string>& names,
                         std::size_t max_terms) {
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (std::abs(state[i]) > 1e-9) labels.push_back(i);
  }
  const std::size_t total = labels.size();
  if (labels.size() > max_terms) {
    std::partial_sort(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(max_terms),
                      labels.end(), [&](std::size_t a, std::size_t b) {
                        return std::abs(state[a]) > std::abs(state[b]);
                      });
    labels.resize(max_terms);
    std::sort(labels.begin(), labels.end());
  }

  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? " " : "") << names[i];
  os << "] ";
  char buf[64];
  for (std::size_t t = 0; t < labels.size(); ++t) {
    const Complex a = state[labels[t]];
    std::snprintf(buf, sizeof buf, "(%.4f%+.4fi)", a.real(), a.imag());
    os << (t ? " + " : "") << buf << "|";
    for (int q = 0; q < state.num_qudits(); ++q) {
      if (q && state.dim() > 10) os << ",";
      os << state.digit(labels[t], q);
    }
    os << ">";
  }
  if (total > labels.size()) os << " + ... (" << total - labels.size() << " more terms)";
  return os.str();
}

}  // namespace remoteop
