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

#include <stdexcept>
#include <string>

namespace remoteop {

// Forced measurement onto a branch whose Born probability is below the
// zero-branch threshold.
class ImpossibleOutcome : public std::runtime_error {
 public:
  explicit ImpossibleOutcome(const std::string& what)
      : std::runtime_error(what) {}
};

// A party touched a qudit it does not currently hold, or sent one it does
// not own.
class LocalityError : public std::logic_error {
 public:
  explicit LocalityError(const std::string& what) : std::logic_error(what) {}
};

class UnsupportedError : public std::domain_error {
 public:
  explicit UnsupportedError(const std::string& what)
      : std::domain_error(what) {}
};

}  // namespace remoteop
