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

// Compilation of a 24-level unitary into alternating displacement and SNAP
// layers,
//
//     U ~ D(alpha_K) S(theta_K) ... D(alpha_1) S(theta_1) D(alpha_0),
//
// on a Fock space truncated to N levels. SNAP phases act on levels 0..23 and
// leave the rest untouched. The figure of merit is the subspace fidelity
// |Tr(U^dagger P A P) / 24|^2 with P the projector on levels 0..23.

#include <complex>
#include <cstdint>
#include <vector>

#include "qudit_circuit.hpp"

namespace btg {

inline constexpr int kSnapLevels = 24;
inline constexpr int kDefaultTruncation = 48;

struct SnapDisplacementAnsatz {
    int truncation = kDefaultTruncation;
    std::vector<std::vector<double>> thetas;  // K vectors of 24 phases
    std::vector<cplx> alphas;                 // K + 1 amplitudes

    int layers() const { return static_cast<int>(thetas.size()); }
};

struct SnapCompileOptions {
    int truncation = kDefaultTruncation;
    std::uint64_t seed = 1;
    int restarts = 4;
    int max_iterations = 3000;
    /// Restarts stop once the infidelity falls below this.
    double target_infidelity = 1e-3;
};

struct SnapCompileResult {
    SnapDisplacementAnsatz ansatz;
    double infidelity = 1.0;
    int restarts_run = 0;
    /// Largest change of the 24 x 24 block when the truncation grows by 16 levels.
    double truncation_error = 0.0;
};

/// Full N x N matrix of the ansatz.
CMatrix ansatz_unitary(const SnapDisplacementAnsatz &a);
/// 1 - |Tr(U^dagger A_sub) / 24|^2
double subspace_infidelity(const CMatrix &target, const SnapDisplacementAnsatz &a);

/// Throws for a non-unitary or non-24-dimensional target, K < 1 or N < 32.
SnapCompileResult compile_snap_displacement(const CMatrix &target, int layers, const SnapCompileOptions &options = {});

/// The ansatz as a one-qudit circuit of dimension `truncation` (time order).
QuditCircuit ansatz_circuit(const SnapDisplacementAnsatz &a);

/// Parameter file: one line per layer, `index alpha_re alpha_im theta_0 ... theta_23`
/// (the final displacement carries zero phases), preceded by comment lines.
std::string ansatz_to_text(const SnapDisplacementAnsatz &a, double infidelity);

}  // namespace btg
