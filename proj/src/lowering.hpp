// Copyright 2026 The btgates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Lowering of composite qubit gates to {1-qubit gates, CNOT} and Clifford+T
// resource counting.
//
// Toffoli uses the 6-CNOT / 7-T network. CSWAP is CNOT . Toffoli . CNOT.
// C^nNOT with n >= 3 controls becomes 4(n-2) Toffolis on n-2 ancilla wires
// appended after the circuit's own wires; the ancillas may hold any state and
// are returned unchanged.

#include <cstddef>

#include "qubit_circuit.hpp"

namespace btg {

/// Expansion of one gate into CNOTs and single-qubit gates. `next_free_wire`
/// is the first wire usable as an ancilla.
std::vector<QubitGate> lower_gate(const QubitGate &g, int next_free_wire);

/// Ancilla wires needed by lower_gate(g, ...).
int ancillas_needed(const QubitGate &g);

/// Cancels adjacent inverse pairs and merges same-axis rotations, looking
/// past gates that commute.
QubitCircuit cancel_adjacent(const QubitCircuit &c);

/// Full lowering to {X, Y, Z, H, S, SDG, T, TDG, RX, RY, RZ, CNOT}; widens the
/// circuit by the ancillas required. When `cancel` is set the result is
/// passed through cancel_adjacent.
QubitCircuit lower_to_cnot(const QubitCircuit &c, bool cancel = true);

struct CliffordTReport {
    QubitCircuit circuit;
    std::size_t t_gates = 0;      // explicit T and TDG
    std::size_t rotations = 0;    // RX, RY, RZ with a non-Clifford angle budget
    double t_per_rotation = 0.0;  // 1.15 log2(1/eps)
    double t_count = 0.0;         // t_gates + rotations * t_per_rotation
    int ancillas = 0;
    std::size_t cnots = 0;
};

/// T cost of one arbitrary-angle rotation synthesized to precision eps.
double rotation_t_cost(double eps);

/// No peephole optimization, so t_count is additive over concatenation.
CliffordTReport lower_to_clifford_t(const QubitCircuit &c, double eps);

}  // namespace btg
