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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "remoteop/protocol/resources.hpp"

namespace remoteop {

// Stable handle for a qudit in a protocol session. Positions in the global
// state vector shift as qudits are discarded; ids do not.
using QuditId = int;

enum class EventKind {
  Step,        // step boundary, label = title
  Prepare,     // party creates qudits in |0>
  Gate,        // party applies label to qudits
  Measure,     // party measures qudits; outcome set
  Discard,     // party drops product-state qudits
  Transfer,    // party sends qudits to the other party
  Classical,   // party sends bits
  EbitHalf,    // party hands one half of a fresh Bell pair to the other
  Snapshot,    // label holds a rendering of the global state
};

std::string_view kind_name(EventKind kind);

struct Event {
  int step = 0;
  Party party = Party::Alice;
  EventKind kind = EventKind::Step;
  std::string label;
  std::vector<QuditId> qudits;
  std::vector<std::string> names;
  std::string bits;                      // Classical payload, '0'/'1'
  std::optional<std::size_t> outcome;    // Measure
  std::optional<double> probability;     // Measure
  ResourceVector ledger;                 // cumulative, after the event
};

/// Ordered log of one protocol run.
class Transcript {
 public:
  void push(Event event) { events_.push_back(std::move(event)); }
  const std::vector<Event>& events() const { return events_; }

  std::size_t count(EventKind kind) const;

  // One line per event.
  std::string to_text() const;

  // Array of {step, party, kind, targets | payload, outcome?, ledger}.
  nlohmann::json to_json() const;

 private:
  std::vector<Event> events_;
};

// Replays the transcript against an ownership log seeded with the initial
// owners. Throws LocalityError at the first event that touches, sends or
// discards a qudit the acting party does not hold.
void check_locality(const Transcript& transcript,
                    const std::map<QuditId, Party>& initial_owners);

}  // namespace remoteop
