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

#include "remoteop/core/gate_matrix.hpp"

namespace remoteop {

// Two-qudit gate |x>|y> -> |x>|x - y mod d>, control first. At d = 2 this
// is the ordinary CNOT.
GateMatrix generalized_cnot(int d);

// One-qudit Fourier transform, entry [y][x] = exp(2 pi i x y / d) / sqrt(d).
// qft(2) is the Hadamard gate.
GateMatrix qft(int d);

// diag(exp(-2 pi i x / d)), x = 0..d-1. s_gate(2) is Pauli Z.
GateMatrix s_gate(int d);

GateMatrix hadamard();
GateMatrix pauli_x();
GateMatrix pauli_z();

}  // namespace remoteop
