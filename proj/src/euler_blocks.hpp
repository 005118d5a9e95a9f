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

// Givens-rotation blocks that diagonalize the cyclic shift of an m-cycle of
// qudit levels (a QFT over Z_m up to column phases and order).
//
// A block is written as an operator product of two-level rotations; the
// leftmost factor acts last. Levels are given as cycle positions: the shift
// maps position k to position k + 1 (mod m), so a block built on the cycle
// (c_0, ..., c_{m-1}) of a left-multiplication permutation diagonalizes that
// permutation on those levels.
//
// The published angle sets are candidates. Each block is checked to
// kDiagonalTol; a failing block is refined from its published angles, and if
// the published structure cannot reach the tolerance a numerically fitted
// structure is used instead. Every outcome is recorded in euler_block_log().

#include <string>
#include <vector>

#include "qudit_circuit.hpp"

namespace btg {

enum class EulerKind { kU2, kU3, kU4, kU6 };

int euler_size(EulerKind kind);
std::string euler_name(EulerKind kind);
EulerKind euler_kind_for_order(int order);

inline constexpr double kDiagonalTol = 1e-8;

struct GivensOp {
    QuditGateKind axis = QuditGateKind::kRz;
    int a = 0;
    int b = 1;
    double angle = 0.0;
};

/// Operator-order product of `ops` on an m-level space.
CMatrix givens_product(const std::vector<GivensOp> &ops, int m);

/// |k> -> |k + 1 mod m>
CMatrix cyclic_shift(int m);

/// max |offdiag(V^dagger S V)| for the shift S.
double shift_offdiagonal(const std::vector<GivensOp> &ops, int m);

/// The published structure and angles. U6 is the literal composition with
/// (a..f) read as cycle positions 0..5.
std::vector<GivensOp> published_ops(EulerKind kind);

struct EulerBlockDesign {
    EulerKind kind = EulerKind::kU2;
    std::vector<GivensOp> ops;  // levels are cycle positions
    std::string method;         // "published", "refined", "fitted-structure" or "givens"
    double published_error = 0.0;
    double error = 0.0;
};

/// Verified design, computed once per kind.
const EulerBlockDesign &euler_design(EulerKind kind);

struct EulerLogEntry {
    EulerKind kind;
    std::string message;
};
/// Outcomes of the verification of the published blocks (forces all designs).
std::vector<EulerLogEntry> euler_block_log();

/// Block acting on qudit `wire` with cycle positions mapped to `cycle` levels.
QuditCircuit build_euler_block(EulerKind kind, const std::vector<int> &cycle, int dimension = 24, int wire = 0,
                               int wires = 1);

/// Appends the gates of design `d` on the given cycle (time order), optionally as its inverse.
void append_block(QuditCircuit &c, const EulerBlockDesign &d, const std::vector<int> &cycle, int wire, bool adjoint);

/// Two-level (Givens) decomposition of a unitary: returns ops and a residual
/// diagonal with U = product(ops) * diag(phases).
struct GivensDecomposition {
    std::vector<GivensOp> ops;  // operator order
    std::vector<double> phases;
};
GivensDecomposition givens_decompose(const CMatrix &u);

}  // namespace btg
