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

#include "remoteop/restricted/restricted_json.hpp"

#include <stdexcept>
#include <string>

namespace remoteop {

nlohmann::json to_json(const RestrictedOperation& op) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const GateMatrix& g : op.blocks()) {
    nlohmann::json entries = nlohmann::json::array();
    for (const Complex& z : g.row_major()) entries.push_back({z.real(), z.imag()});
    blocks.push_back(std::move(entries));
  }
  return nlohmann::json{{"version", kRestrictedJsonVersion},
                        {"d", op.dim()},
                        {"N", op.n_perm()},
                        {"M", op.m_block()},
                        {"f", op.permutation().map()},
                        {"blocks", std::move(blocks)}};
}

RestrictedOperation restricted_from_json(const nlohmann::json& doc) {
  try {
    if (doc.contains("version") && doc.at("version").get<int>() != kRestrictedJsonVersion) {
      throw std::domain_error("unsupported version " + doc.at("version").dump());
    }
    const int d = doc.at("d").get<int>();
    const int n = doc.at("N").get<int>();
    const int m = doc.at("M").get<int>();
    Permutation f(doc.at("f").get<std::vector<std::size_t>>());
    std::vector<GateMatrix> blocks;
    for (const auto& entries : doc.at("blocks")) {
      const std::size_t count = entries.size();
      std::size_t dim = 0;
      while (dim * dim < count) ++dim;
      if (dim * dim != count) throw std::domain_error("block entry count is not a square");
      Matrix g(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
      for (std::size_t i = 0; i < count; ++i) {
        const auto& z = entries.at(i);
        if (!z.is_array() || z.size() != 2) throw std::domain_error("entry must be [re, im]");
        g(static_cast<Eigen::Index>(i / dim), static_cast<Eigen::Index>(i % dim)) =
            Complex(z.at(0).get<double>(), z.at(1).get<double>());
      }
      blocks.emplace_back(std::move(g));
    }
    return RestrictedOperation(d, n, m, std::move(f), std::move(blocks));
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("restricted operation JSON: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("restricted operation JSON: ") + e.what());
  }
}

}  // namespace remoteop
