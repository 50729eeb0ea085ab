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

#include "remoteop/accounting/tables.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace remoteop {

namespace costs {

namespace {

ScenarioCost shared(Affine ebits, Affine cbits_each_way) {
  AffineCost c;
  c.ebits = ebits;
  c.cbits_a_to_b = cbits_each_way;
  c.cbits_b_to_a = cbits_each_way;
  return ScenarioCost(Scenario::SharedEntanglement, c);
}

}  // namespace

ScenarioCost eisert_cu() { return shared(Affine::value(1), Affine::value(1)); }

ScenarioCost yang_cu() {
  AffineCost c;
  c.qudits_b_to_a = Affine::value(1);
  c.cbits_a_to_b = Affine::value(1);
  return ScenarioCost(Scenario::QubitTransmission, c);
}

ScenarioCost zhao_split() { return shared(Affine::N(), Affine::N()); }

ScenarioCost zhao_bob_holds_all() {
  return shared(Affine::N() + Affine::M(2), Affine::N() + Affine::M(2));
}

ScenarioCost wang_phases() { return shared(Affine::N(), Affine::N()); }

ScenarioCost entanglement_free(RemoteCase remote_case) {
  AffineCost c;
  c.cbits_a_to_b = Affine::N();
  if (remote_case == RemoteCase::BobHoldsAll) {
    c.qudits_b_to_a = Affine::N() + Affine::M();
    c.qudits_a_to_b = Affine::M();
  } else {
    c.qudits_b_to_a = Affine::N();
  }
  return ScenarioCost(Scenario::QubitTransmission, c);
}

ScenarioCost simple_swap() {
  AffineCost c;
  c.qudits_b_to_a = Affine::N() + Affine::M();
  c.qudits_a_to_b = Affine::N() + Affine::M();
  return ScenarioCost(Scenario::QubitTransmission, c);
}

ScenarioCost bqst() {
  const Affine twice = 2 * (Affine::N() + Affine::M());
  return shared(twice, twice);
}

}  // namespace costs

namespace {

ProtocolRow make_row(std::string id, std::string name, const ScenarioCost& native) {
  if (native.scenario() == Scenario::QubitTransmission) {
    return ProtocolRow{std::move(id), std::move(name), native, to_shared_entanglement(native)};
  }
  return ProtocolRow{std::move(id), std::move(name), to_qubit_transmission(native), native};
}

CostTable make_table(std::string id, std::string caption, ProtocolRow upper, ProtocolRow lower) {
  AffineCost gq = gap(upper.qubit_transmission, lower.qubit_transmission);
  AffineCost gs = gap(upper.shared_entanglement, lower.shared_entanglement);
  return CostTable{std::move(id), std::move(caption), {std::move(upper), std::move(lower)}, gq, gs};
}

std::string cell(const Affine& a, const std::optional<EvalPoint>& at) {
  if (at) return std::to_string(a.evaluate(at->n, at->m));
  return to_string(a);
}

std::string gap_cell(const Affine& a, const std::optional<EvalPoint>& at) {
  if (a.is_zero()) return "";
  return cell(a, at);
}

}  // namespace

std::vector<CostTable> generate_tables() {
  std::vector<CostTable> tables;
  tables.push_back(make_table("table1", "CU(N-1,1): N-1 controls at Bob, target at Alice",
                              make_row("eisert2000", "Eisert et al. 2000", costs::eisert_cu()),
                              make_row("yang2008", "Yang 2008", costs::yang_cu())));
  tables.push_back(make_table("table2", "U(f,G): B_1..B_N at Bob, A_1..A_M at Alice",
                              make_row("zhao2008", "Zhao et al. 2008", costs::zhao_split()),
                              make_row("entanglement_free", "Entanglement-free",
                                       costs::entanglement_free(RemoteCase::Split))));
  tables.push_back(make_table("table3", "U(f,G): all N+M qubits at Bob",
                              make_row("zhao2007", "Zhao et al. 2007", costs::zhao_bob_holds_all()),
                              make_row("entanglement_free", "Entanglement-free",
                                       costs::entanglement_free(RemoteCase::BobHoldsAll))));
  tables.push_back(make_table("table4", "U(f,phi): N qubits at Bob",
                              make_row("wang2006", "Wang 2006", costs::wang_phases()),
                              make_row("entanglement_free", "Entanglement-free",
                                       costs::entanglement_free(RemoteCase::MZero))));
  return tables;
}

std::vector<ProtocolRow> baseline_rows() {
  return {make_row("simple_swap", "Send-all round trip", costs::simple_swap()),
          make_row("bqst", "Bidirectional teleportation", costs::bqst())};
}

RowCells row_cells(const ProtocolRow& row, const std::optional<EvalPoint>& at) {
  return RowCells{cell(row.qubit_transmission.cost().total_qudits(), at),
                  cell(row.qubit_transmission.cost().total_cbits(), at),
                  cell(row.shared_entanglement.cost().ebits, at),
                  cell(row.shared_entanglement.cost().total_cbits(), at)};
}

RowCells gap_cells(const CostTable& table, const std::optional<EvalPoint>& at) {
  return RowCells{gap_cell(table.gap_qubit_transmission.total_qudits(), at),
                  cell(table.gap_qubit_transmission.total_cbits(), at),
                  gap_cell(table.gap_shared_entanglement.ebits, at),
                  cell(table.gap_shared_entanglement.total_cbits(), at)};
}

std::string render_tables_text(const std::vector<CostTable>& tables, const std::optional<EvalPoint>& at) {
  std::ostringstream os;
  constexpr int kName = 22;
  constexpr int kCell = 10;
  auto line = [&](const std::string& label, const RowCells& c) {
    os << std::left << std::setw(kName) << label << "| " << std::setw(kCell) << c.qubits
       << std::setw(kCell) << c.cbits_qubit << "| " << std::setw(kCell) << c.ebits << c.cbits_shared
       << "\n";
  };
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const CostTable& table = tables[t];
    if (t) os << "\n";
    os << table.table_id << ": " << table.caption;
    if (at) os << "  (N=" << at->n << ", M=" << at->m << ")";
    os << "\n";
    os << std::left << std::setw(kName) << "" << "| " << std::setw(2 * kCell) << "qubit-transmission"
       << "| shared-entanglement\n";
    line("protocol", RowCells{"qubits", "cbits", "ebits", "cbits"});
    os << std::string(kName + 4 + 4 * kCell, '-') << "\n";
    for (const ProtocolRow& row : table.rows) line(row.name, row_cells(row, at));
    os << std::string(kName + 4 + 4 * kCell, '-') << "\n";
    line("Gap", gap_cells(table, at));
  }
  return os.str();
}

std::string render_tables_csv(const std::vector<CostTable>& tables, const std::optional<EvalPoint>& at) {
  std::ostringstream os;
  os << "table_id,protocol,qubits,cbits_qubit_transmission,ebits,cbits_shared_entanglement\n";
  for (const CostTable& table : tables) {
    for (const ProtocolRow& row : table.rows) {
      const RowCells c = row_cells(row, at);
      os << table.table_id << "," << row.id << "," << c.qubits << "," << c.cbits_qubit << ","
         << c.ebits << "," << c.cbits_shared << "\n";
    }
    const RowCells g = gap_cells(table, at);
    os << table.table_id << ",gap," << g.qubits << "," << g.cbits_qubit << "," << g.ebits << ","
       << g.cbits_shared << "\n";
  }
  return os.str();
}

nlohmann::json tables_to_json(const std::vector<CostTable>& tables, const std::optional<EvalPoint>& at) {
  // Evaluated cells are emitted as integers, symbolic ones as strings.
  auto value = [&](const std::string& text) -> nlohmann::json {
    if (!at || text.empty()) return text;
    return std::stol(text);
  };
  auto cells_json = [&](const RowCells& c) {
    return nlohmann::json{
        {"qubit_transmission", {{"qubits", value(c.qubits)}, {"cbits", value(c.cbits_qubit)}}},
        {"shared_entanglement", {{"ebits", value(c.ebits)}, {"cbits", value(c.cbits_shared)}}}};
  };
  nlohmann::json out = nlohmann::json::array();
  for (const CostTable& table : tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ProtocolRow& row : table.rows) {
      nlohmann::json r = cells_json(row_cells(row, at));
      r["protocol"] = row.id;
      r["name"] = row.name;
      rows.push_back(std::move(r));
    }
    out.push_back({{"table_id", table.table_id},
                   {"caption", table.caption},
                   {"rows", std::move(rows)},
                   {"gaps", cells_json(gap_cells(table, at))}});
  }
  return out;
}

}  // namespace remoteop
