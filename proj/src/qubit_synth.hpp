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

// The four BT primitive gates on qubit registers and their oracle checks.
//
// A register uses wires (m, n, o, p, q) = (0..4). Multiplication acts on two
// registers: g on wires 0..4 (left factor, unchanged) and h on wires 5..9,
// mapping |g>|h> to |g>|g h>.

#include <cstdint>
#include <string>
#include <vector>

#include "group.hpp"
#include "qubit_circuit.hpp"

namespace btg {

inline constexpr int kRegisterWires = 5;
inline constexpr int kRegisterDim = 32;

/// Reference counts quoted for the published circuits.
struct ReferenceCounts {
    static constexpr int kTraceCnots = 22;
    static constexpr int kTraceRz = 11;
    static constexpr int kInversionCnots = 31;
    static constexpr int kTraceRoutedCnots = 39;
    static constexpr int kInversionRoutedCnots = 49;
    static constexpr int kFourierCnots = 1025;
    static constexpr int kFourierRz = 2139;
};

QubitCircuit build_inversion();
QubitCircuit build_multiplication();
QubitCircuit build_trace(double theta);

/// Parity terms of Re Tr on the 32 register states: Re Tr(x) equals the sum
/// of coefficient * (-1)^{popcount(mask & x)} for valid x. States 24..31 are
/// assigned -1 when m = 0 and +1 otherwise, which leaves only terms
/// containing m and no constant.
struct ParityTerm {
    std::uint32_t mask = 0;
    double coefficient = 0.0;
};
std::vector<ParityTerm> trace_parity_terms();

/// 24 x 24 transform: row (rho, i, j) in the order rho_1..rho_7, i outer,
/// j inner; column g; entry sqrt(d_rho / 24) rho(g)_ij.
CMatrix fourier_matrix();
/// fourier_matrix() in the top-left of a 32 x 32 identity.
CMatrix build_fourier_unitary();
QubitCircuit build_fourier_circuit();

/// Forward transform by explicit sums over irreps.
CVector fourier_transform(const CVector &f);
/// Inverse transform, f(g) = sum_rho sqrt(d_rho/24) sum_ij conj(rho(g)_ij) fhat(rho, i, j).
CVector inverse_fourier_transform(const CVector &fhat);
CVector fourier_roundtrip(const CVector &f);

struct SubspaceCheck {
    std::size_t checked = 0;
    std::size_t correct = 0;
    double max_error = 0.0;
    bool ok() const { return checked > 0 && checked == correct; }
};

inline constexpr double kCheckTol = 1e-10;

/// |g> -> |g^-1> on the 24 valid states.
SubspaceCheck check_inversion(const QubitCircuit &c, double tol = kCheckTol);
/// |g>|h> -> |g>|gh> on the 576 valid pairs; the register layout may be
/// widened by ancillas starting in |0>.
SubspaceCheck check_multiplication(const QubitCircuit &c, double tol = kCheckTol);
/// Diagonal with phase e^{i theta ReTr g} up to one global phase.
SubspaceCheck check_trace(const QubitCircuit &c, double theta, double tol = kCheckTol);
/// Columns 0..23 equal build_fourier_unitary() up to one global phase.
SubspaceCheck check_fourier(const QubitCircuit &c, double tol = 1e-8);

}  // namespace btg
