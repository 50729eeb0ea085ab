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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "remoteop/accounting/tables.hpp"
#include "remoteop/protocol/protocols.hpp"

namespace remoteop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;

inline constexpr std::uint64_t kDefaultCap = 4096;

enum class Format { Text, Json, Csv };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int d = 2;
  int n = 1;
  int m = 0;
  RemoteCase remote_case = RemoteCase::Split;
  std::uint64_t seed = 1;
  int trials = 20;
  bool enumerate = false;
  double tolerance = 1e-10;
  Format format = Format::Text;
};

// REMOTEOP_CAP when set, else kDefaultCap. Throws ConfigError on a
// malformed value.
std::uint64_t amplitude_cap();

// Throws ConfigError for an invalid shape, an M > 0 mzero run, or
// d^(2N+M) above the cap.
void validate(const RunConfig& config, std::uint64_t cap);

struct TrialReport {
  int trial = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0.0;
  std::size_t branches = 0;
  ResourceVector ledger;
  bool ledger_ok = false;
  bool passed = false;
};

struct VerifyReport {
  RunConfig config;
  ResourceVector expected_ledger;
  std::vector<TrialReport> trials;
  bool passed() const;
};

VerifyReport run_verify(const RunConfig& config);

// Parses "N=..,M=.." (either order, M optional).
EvalPoint parse_eval(const std::string& text);

// Entry point shared by the executable and the tests. argv[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace remoteop::cli
