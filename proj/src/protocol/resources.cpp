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

#include "remoteop/protocol/resources.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace remoteop {

std::string_view party_name(Party p) { return p == Party::Alice ? "Alice" : "Bob"; }

void ResourceVector::add_qudits(Party sender, std::uint64_t n) {
  (sender == Party::Bob ? qudits_b_to_a : qudits_a_to_b) += n;
}

void ResourceVector::add_cbits(Party sender, std::uint64_t n) {
  (sender == Party::Bob ? cbits_b_to_a : cbits_a_to_b) += n;
}

ResourceVector& ResourceVector::operator+=(const ResourceVector& rhs) {
  qudits_b_to_a += rhs.qudits_b_to_a;
  qudits_a_to_b += rhs.qudits_a_to_b;
  cbits_b_to_a += rhs.cbits_b_to_a;
  cbits_a_to_b += rhs.cbits_a_to_b;
  ebits += rhs.ebits;
  return *this;
}

ResourceVector operator-(const ResourceVector& lhs, const ResourceVector& rhs) {
  auto sub = [](std::uint64_t a, std::uint64_t b) {
    if (b > a) throw std::domain_error("ResourceVector: difference would be negative");
    return a - b;
  };
  return ResourceVector{sub(lhs.qudits_b_to_a, rhs.qudits_b_to_a),
                        sub(lhs.qudits_a_to_b, rhs.qudits_a_to_b),
                        sub(lhs.cbits_b_to_a, rhs.cbits_b_to_a),
                        sub(lhs.cbits_a_to_b, rhs.cbits_a_to_b), sub(lhs.ebits, rhs.ebits)};
}

std::ostream& operator<<(std::ostream& os, const ResourceVector& r) {
  return os << "{qudits B->A " << r.qudits_b_to_a << ", qudits A->B " << r.qudits_a_to_b
            << ", cbits B->A " << r.cbits_b_to_a << ", cbits A->B " << r.cbits_a_to_b
            << ", ebits " << r.ebits << "}";
}

nlohmann::json to_json(const ResourceVector& r) {
  return nlohmann::json{{"qudits_b_to_a", r.qudits_b_to_a},
                        {"qudits_a_to_b", r.qudits_a_to_b},
                        {"cbits_b_to_a", r.cbits_b_to_a},
                        {"cbits_a_to_b", r.cbits_a_to_b},
                        {"ebits", r.ebits}};
}

int cbits_for_outcome(int d, int n) {
  if (d < 2 || n < 0) throw std::domain_error("cbits_for_outcome: need d >= 2 and n >= 0");
  // d^n is held in 128 bits so the comparison with 2^b is exact.
  unsigned __int128 labels = 1;
  for (int i = 0; i < n; ++i) {
    labels *= static_cast<unsigned>(d);
    if (labels >> 100) throw std::domain_error("cbits_for_outcome: d^n too large");
  }
  int bits = 0;
  unsigned __int128 reach = 1;
  while (reach < labels) {
    reach <<= 1;
    ++bits;
  }
  return bits;
}

std::vector<bool> encode_outcome(std::size_t value, int bits) {
  if (bits < 64 && (value >> bits) != 0) {
    throw std::domain_error("encode_outcome: " + std::to_string(value) + " does not fit in " +
                            std::to_string(bits) + " bits");
  }
  std::vector<bool> out(static_cast<std::size_t>(bits));
  for (int i = 0; i < bits; ++i) {
    out[static_cast<std::size_t>(bits - 1 - i)] = i < 64 && ((value >> i) & 1u);
  }
  return out;
}

std::size_t decode_outcome(const std::vector<bool>& bits) {
  std::size_t value = 0;
  for (const bool b : bits) value = (value << 1) | (b ? 1u : 0u);
  return value;
}

}  // namespace remoteop
