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

// Generic synthesis of an n-qubit unitary into {CNOT, RY, RZ} by quantum
// Shannon decomposition: a cosine-sine split on the top wire, demultiplexing
// of the block-diagonal factors, and Gray-code expansion of the multiplexed
// rotations. The result equals the input up to a global phase.

#include <cstddef>

#include "qubit_circuit.hpp"

namespace btg {

inline constexpr int kMaxSynthesisQubits = 6;

/// Rotations with |angle| below this are dropped.
inline constexpr double kSynthesisAngleTol = 1e-12;

QubitCircuit synthesize_unitary(const CMatrix &u);

/// R_axis on `target`, with angle angles[k] when the control wires (bit j of
/// k on controls[j]) hold k. Axis is RY or RZ.
void append_multiplexed_rotation(QubitCircuit &c, QubitGateKind axis, int target, const std::vector<int> &controls,
                                 const std::vector<double> &angles);

struct SynthesisCounts {
    std::size_t cnot = 0;
    std::size_t ry = 0;
    std::size_t rz = 0;
};
SynthesisCounts synthesis_counts(const QubitCircuit &c);

}  // namespace btg
