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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "remoteop/kernels/kernels.hpp"

namespace remoteop::kernels {

#if defined(REMOTEOP_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(REMOTEOP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend default_backend() {
  if (const char* forced = std::getenv("REMOTEOP_KERNEL")) {
    if (std::string(forced) == "scalar") return Backend::Scalar;
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& selected() {
  static std::atomic<Backend> backend{default_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool is_available(Backend backend) {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Backend backend) {
  if (!is_available(backend)) {
    throw std::domain_error("kernel backend '" +
                            std::string(backend_name(backend)) +
                            "' is not available on this machine");
  }
#if defined(REMOTEOP_HAVE_AVX2)
  if (backend == Backend::Avx2) return avx2_table();
#endif
  return scalar_table();
}

const KernelTable& active() { return table(selected().load()); }

Backend active_backend() { return selected().load(); }

void set_active_backend(Backend backend) {
  if (!is_available(backend)) {
    throw std::domain_error("kernel backend '" +
                            std::string(backend_name(backend)) +
                            "' is not available on this machine");
  }
  selected().store(backend);
}

}  // namespace remoteop::kernels
