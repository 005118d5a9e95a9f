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

// The four BT primitives on 24-level qudits. Level k of a qudit is the group
// element with index k. Multiplication acts on two qudits: wire 0 holds the
// left factor g (unchanged) and wire 1 holds h, mapped to g h.

#include <cstddef>
#include <vector>

#include "euler_blocks.hpp"
#include "group.hpp"
#include "qubit_synth.hpp"
#include "qudit_circuit.hpp"

namespace btg {

inline constexpr int kQuditDim = kGroupOrder;

/// One X^(g, g^-1) per element with g != g^-1.
QuditCircuit build_inversion_qudit();

/// One RZ^(2a, 2a+1) per pair (g, -g) with Re Tr g != 0.
QuditCircuit build_trace_qudit(double theta);
/// The same action as a single SNAP with phases theta * ReTr(g).
QuditCircuit build_trace_snap(double theta);

/// Blocks of Euler rotations on the cycles of left multiplication by g;
/// V_g^dagger P_g V_g is diagonal.
QuditCircuit build_vg(GroupIndex g);
/// Unitary of build_vg(g) on one qudit.
CMatrix vg_matrix(GroupIndex g);
/// Permutation matrix of h -> g h.
CMatrix permutation_matrix(GroupIndex g);

struct VgCheck {
    double offdiagonal = 0.0;      // max |offdiag(V^dagger P V)|
    double eigenphase_error = 0.0; // distance of the sorted diagonal phases from the expected multiset
};
VgCheck check_vg(GroupIndex g);

/// Element order of the multiplication sequence: identity skipped, each
/// element followed by its inverse so that V_g V_{g^-1}^dagger cancels.
std::vector<GroupIndex> multiplication_sequence();
QuditCircuit build_multiplication_qudit();

/// Two-level decomposition of the 24 x 24 transform, closed by one SNAP.
QuditCircuit build_fourier_qudit();

struct QuditCheck {
    std::size_t checked = 0;
    std::size_t correct = 0;
    double max_error = 0.0;
    bool ok() const { return checked > 0 && checked == correct; }
};
QuditCheck check_inversion_qudit(const QuditCircuit &c, double tol = 1e-8);
QuditCheck check_trace_qudit(const QuditCircuit &c, double theta, double tol = 1e-8);
QuditCheck check_multiplication_qudit(const QuditCircuit &c, double tol = 1e-8);
QuditCheck check_fourier_qudit(const QuditCircuit &c, double tol = 1e-8);

struct VgRotationRow {
    int order = 1;
    int elements = 0;        // number of g with this order
    int qft_published = 0;   // published rotations per Z_m transform
    int vg_published = 0;    // published rotations per V_g
    int qft_realized = 0;    // rotations in this library's block
    int vg_realized = 0;
};
struct VgRotationReport {
    std::vector<VgRotationRow> rows;
    int published_unmerged = 0;   // sum of elements * vg_published
    int published_merged = 0;     // V and V^dagger per inverse pair
    int published_quoted = 2244;
    int realized_unmerged = 0;
    int realized_merged = 0;
    int realized_circuit = 0;     // Givens gates in build_multiplication_qudit()
    int csnaps = 0;
    int native_snap = 575;
    int native_displacement = 575;
};
VgRotationReport count_vg_rotations();

}  // namespace btg
