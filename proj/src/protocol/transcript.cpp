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

#include "remoteop/protocol/transcript.hpp"

#include <algorithm>
#include <sstream>

#include "remoteop/core/errors.hpp"

namespace remoteop {

std::string_view kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::Step: return "step";
    case EventKind::Prepare: return "prepare";
    case EventKind::Gate: return "gate";
    case EventKind::Measure: return "measure";
    case EventKind::Discard: return "discard";
    case EventKind::Transfer: return "transfer";
    case EventKind::Classical: return "classical";
    case EventKind::EbitHalf: return "ebit_half";
    case EventKind::Snapshot: return "snapshot";
  }
  return "unknown";
}

std::size_t Transcript::count(EventKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      events_.begin(), events_.end(), [kind](const Event& e) { return e.kind == kind; }));
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

std::string ledger_text(const ResourceVector& r) {
  std::ostringstream os;
  os << "[ledger qudits B->A " << r.qudits_b_to_a << ", A->B " << r.qudits_a_to_b << "; cbits B->A "
     << r.cbits_b_to_a << ", A->B " << r.cbits_a_to_b << "; ebits " << r.ebits << "]";
  return os.str();
}

}  // namespace

std::string Transcript::to_text() const {
  std::ostringstream os;
  for (const Event& e : events_) {
    if (e.kind == EventKind::Step) {
      os << "Step " << e.step << ": " << e.label << "\n";
      continue;
    }
    if (e.kind == EventKind::Snapshot) {
      os << "    state: " << e.label << "\n";
      continue;
    }
    const std::string_view who = party_name(e.party);
    const std::string_view to = party_name(other(e.party));
    os << "  " << who << (e.party == Party::Bob ? "  " : "") << " ";
    switch (e.kind) {
      case EventKind::Prepare:
        os << "prepares |0> on " << join_names(e.names);
        break;
      case EventKind::Gate:
        os << "applies " << e.label << " to (" << join_names(e.names) << ")";
        break;
      case EventKind::Measure:
        os << "measures (" << join_names(e.names) << ") -> outcome " << e.outcome.value_or(0)
           << " (p = " << e.probability.value_or(0.0) << ")";
        break;
      case EventKind::Discard:
        os << "discards " << join_names(e.names);
        break;
      case EventKind::Transfer:
        os << "sends qudits " << join_names(e.names) << " to " << to << " " << ledger_text(e.ledger);
        break;
      case EventKind::Classical:
        os << "sends bits " << e.bits << " to " << to << " " << ledger_text(e.ledger);
        break;
      case EventKind::EbitHalf:
        os << "shares Bell pair, hands " << e.names.back() << " to " << to << " "
           << ledger_text(e.ledger);
        break;
      default:
        break;
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json Transcript::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const Event& e : events_) {
    nlohmann::json j{{"step", e.step},
                     {"party", std::string(party_name(e.party))},
                     {"kind", std::string(kind_name(e.kind))}};
    switch (e.kind) {
      case EventKind::Transfer:
        j["payload"] = {{"type", "qudits"}, {"qudits", e.names}};
        break;
      case EventKind::Classical:
        j["payload"] = {{"type", "cbits"}, {"bits", e.bits}};
        break;
      case EventKind::EbitHalf:
        j["payload"] = {{"type", "ebit_half"}, {"qudit", e.names.back()}};
        j["targets"] = e.names;
        break;
      case EventKind::Step:
      case EventKind::Snapshot:
        j["label"] = e.label;
        break;
      default:
        j["targets"] = e.names;
        if (!e.label.empty()) j["label"] = e.label;
        break;
    }
    if (e.outcome) j["outcome"] = *e.outcome;
    if (e.probability) j["probability"] = *e.probability;
    j["ledger"] = remoteop::to_json(e.ledger);
    out.push_back(std::move(j));
  }
  return out;
}

void check_locality(const Transcript& transcript, const std::map<QuditId, Party>& initial_owners) {
  std::map<QuditId, Party> owner = initial_owners;
  auto require_owned = [&](const Event& e) {
    for (const QuditId q : e.qudits) {
      const auto it = owner.find(q);
      if (it == owner.end() || it->second != e.party) {
        std::ostringstream os;
        os << "step " << e.step << ": " << party_name(e.party) << " " << kind_name(e.kind)
           << " touches qudit " << q << " it does not hold";
        throw LocalityError(os.str());
      }
    }
  };
  for (const Event& e : transcript.events()) {
    switch (e.kind) {
      case EventKind::Prepare:
        for (const QuditId q : e.qudits) {
          if (owner.count(q)) throw LocalityError("prepare reuses live qudit id");
          owner[q] = e.party;
        }
        break;
      case EventKind::EbitHalf:
        // qudits = {kept half, handed half}; both are fresh.
        for (const QuditId q : e.qudits) {
          if (owner.count(q)) throw LocalityError("Bell pair reuses live qudit id");
        }
        owner[e.qudits.front()] = e.party;
        owner[e.qudits.back()] = other(e.party);
        break;
      case EventKind::Gate:
      case EventKind::Measure:
        require_owned(e);
        break;
      case EventKind::Discard:
        require_owned(e);
        for (const QuditId q : e.qudits) owner.erase(q);
        break;
      case EventKind::Transfer:
        require_owned(e);
        for (const QuditId q : e.qudits) owner[q] = other(e.party);
        break;
      default:
        break;
    }
  }
}

}  // namespace remoteop
