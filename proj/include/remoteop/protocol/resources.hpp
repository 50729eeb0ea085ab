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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace remoteop {

enum class Party { Alice, Bob };

constexpr Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }
std::string_view party_name(Party p);

/// Communication consumed by a protocol run. Counters only grow.
struct ResourceVector {
  std::uint64_t qudits_b_to_a = 0;
  std::uint64_t qudits_a_to_b = 0;
  std::uint64_t cbits_b_to_a = 0;
  std::uint64_t cbits_a_to_b = 0;
  std::uint64_t ebits = 0;

  std::uint64_t total_qudits() const { return qudits_b_to_a + qudits_a_to_b; }
  std::uint64_t total_cbits() const { return cbits_b_to_a + cbits_a_to_b; }

  void add_qudits(Party sender, std::uint64_t n);
  void add_cbits(Party sender, std::uint64_t n);

  ResourceVector& operator+=(const ResourceVector& rhs);
  friend ResourceVector operator+(ResourceVector lhs, const ResourceVector& rhs) {
    return lhs += rhs;
  }
  // Counter-wise difference; throws std::domain_error if any would go
  // negative.
  friend ResourceVector operator-(const ResourceVector& lhs, const ResourceVector& rhs);

  bool operator==(const ResourceVector&) const = default;
};

std::ostream& operator<<(std::ostream& os, const ResourceVector& r);
nlohmann::json to_json(const ResourceVector& r);

// ceil(n log2 d), computed exactly as the smallest b with 2^b >= d^n.
int cbits_for_outcome(int d, int n);

// value as `bits` binary digits, most significant first.
std::vector<bool> encode_outcome(std::size_t value, int bits);
std::size_t decode_outcome(const std::vector<bool>& bits);

}  // namespace remoteop
