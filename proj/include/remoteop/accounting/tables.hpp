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
#include <string>
#include <vector>

#include <json.hpp>

#include "remoteop/accounting/affine_cost.hpp"
#include "remoteop/protocol/protocols.hpp"

namespace remoteop {

// Native costs of each protocol, in the scenario it was designed for.
// Prior shared-entanglement protocols are recorded constants; the others
// match what protocol-engine meters at d = 2.
namespace costs {
ScenarioCost eisert_cu();            // CU(N-1,1) with 1 ebit
ScenarioCost yang_cu();              // CU(N-1,1), entanglement-free
ScenarioCost zhao_split();           // U(f,G), B at Bob, A at Alice
ScenarioCost zhao_bob_holds_all();   // U(f,G), everything at Bob
ScenarioCost wang_phases();          // U(f,phi)
ScenarioCost entanglement_free(RemoteCase remote_case);
ScenarioCost simple_swap();
ScenarioCost bqst();
}  // namespace costs

struct ProtocolRow {
  std::string id;
  std::string name;
  ScenarioCost qubit_transmission;
  ScenarioCost shared_entanglement;
};

/// One comparison table: the upper row is the prior protocol, the lower
/// row the entanglement-free one. Each row is shown in both scenarios,
/// converting from its native one.
struct CostTable {
  std::string table_id;
  std::string caption;
  std::vector<ProtocolRow> rows;  // {upper, lower}
  AffineCost gap_qubit_transmission;
  AffineCost gap_shared_entanglement;
};

std::vector<CostTable> generate_tables();

// Rows for protocol runs that are not in the comparison tables.
std::vector<ProtocolRow> baseline_rows();

// The four displayed cells of a row: qubits, cbits | ebits, cbits.
struct RowCells {
  std::string qubits;
  std::string cbits_qubit;
  std::string ebits;
  std::string cbits_shared;
};

struct EvalPoint {
  long n = 1;
  long m = 0;
};

// Symbolic cells when `at` is empty, integers otherwise.
RowCells row_cells(const ProtocolRow& row, const std::optional<EvalPoint>& at = std::nullopt);
// Gap cells; qubit and ebit gaps are blank when zero.
RowCells gap_cells(const CostTable& table, const std::optional<EvalPoint>& at = std::nullopt);

std::string render_tables_text(const std::vector<CostTable>& tables,
                               const std::optional<EvalPoint>& at = std::nullopt);
std::string render_tables_csv(const std::vector<CostTable>& tables,
                              const std::optional<EvalPoint>& at = std::nullopt);
// Array of {table_id, caption, rows, gaps}.
nlohmann::json tables_to_json(const std::vector<CostTable>& tables,
                              const std::optional<EvalPoint>& at = std::nullopt);

}  // namespace remoteop
