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

#include <json.hpp>

#include "remoteop/restricted/restricted_operation.hpp"

namespace remoteop {

inline constexpr int kRestrictedJsonVersion = 1;

// {"version": 1, "d": .., "N": .., "M": .., "f": [..],
//  "blocks": [[[re, im], ...], ...]}
// Each block is flattened row-major.
nlohmann::json to_json(const RestrictedOperation& op);

// Throws std::domain_error on a malformed or invalid document.
RestrictedOperation restricted_from_json(const nlohmann::json& doc);

}  // namespace remoteop
