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

#include "remoteop/accounting/affine_cost.hpp"

#include <stdexcept>

namespace remoteop {

namespace {

void append_term(std::string& out, long coefficient, const char* symbol) {
  if (coefficient == 0) return;
  if (coefficient < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const long magnitude = coefficient < 0 ? -coefficient : coefficient;
  if (*symbol == '\0' || magnitude != 1) out += std::to_string(magnitude);
  out += symbol;
}

std::uint64_t non_negative(long value, const char* counter) {
  if (value < 0) {
    throw std::domain_error(std::string("AffineCost: ") + counter + " evaluates to " +
                            std::to_string(value));
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::string to_string(const Affine& a) {
  std::string out;
  append_term(out, a.n, "N");
  append_term(out, a.m, "M");
  append_term(out, a.constant, "");
  return out.empty() ? "0" : out;
}

ResourceVector AffineCost::evaluate(long n_value, long m_value) const {
  return ResourceVector{non_negative(qudits_b_to_a.evaluate(n_value, m_value), "qudits B->A"),
                        non_negative(qudits_a_to_b.evaluate(n_value, m_value), "qudits A->B"),
                        non_negative(cbits_b_to_a.evaluate(n_value, m_value), "cbits B->A"),
                        non_negative(cbits_a_to_b.evaluate(n_value, m_value), "cbits A->B"),
                        non_negative(ebits.evaluate(n_value, m_value), "ebits")};
}

std::string_view scenario_name(Scenario s) {
  return s == Scenario::QubitTransmission ? "qubit_transmission" : "shared_entanglement";
}

ScenarioCost::ScenarioCost(Scenario scenario, AffineCost cost)
    : scenario_(scenario), cost_(std::move(cost)) {
  if (scenario_ == Scenario::QubitTransmission && !cost_.ebits.is_zero()) {
    throw std::domain_error("qubit-transmission cost cannot consume ebits");
  }
  if (scenario_ == Scenario::SharedEntanglement &&
      !(cost_.qudits_b_to_a.is_zero() && cost_.qudits_a_to_b.is_zero())) {
    throw std::domain_error("shared-entanglement cost cannot transmit qubits");
  }
}

ScenarioCost to_shared_entanglement(const ScenarioCost& cost) {
  if (cost.scenario() != Scenario::QubitTransmission) {
    throw std::domain_error("to_shared_entanglement: cost is already in the shared-entanglement scenario");
  }
  const AffineCost& c = cost.cost();
  AffineCost out;
  out.ebits = c.total_qudits();
  out.cbits_b_to_a = c.cbits_b_to_a + 2 * c.qudits_b_to_a;
  out.cbits_a_to_b = c.cbits_a_to_b + 2 * c.qudits_a_to_b;
  return ScenarioCost(Scenario::SharedEntanglement, out);
}

ScenarioCost to_qubit_transmission(const ScenarioCost& cost) {
  if (cost.scenario() != Scenario::SharedEntanglement) {
    throw std::domain_error("to_qubit_transmission: cost is already in the qubit-transmission scenario");
  }
  const AffineCost& c = cost.cost();
  AffineCost out;
  out.qudits_b_to_a = c.ebits;
  out.cbits_b_to_a = c.cbits_b_to_a;
  out.cbits_a_to_b = c.cbits_a_to_b;
  return ScenarioCost(Scenario::QubitTransmission, out);
}

AffineCost gap(const ScenarioCost& upper, const ScenarioCost& lower) {
  if (upper.scenario() != lower.scenario()) {
    throw std::domain_error("gap: costs are stated in different scenarios");
  }
  return upper.cost() - lower.cost();
}

}  // namespace remoteop
