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

#include <gtest/gtest.h>

#include <random>

#include "euler_blocks.hpp"
#include "qudit_synth.hpp"
#include "snap_compile.hpp"

namespace btg {
namespace {

TEST(QuditGates, DisplacementIsUnitaryAndComposes) {
    const CMatrix d = displacement_matrix(40, cplx(0.3, -0.2));
    EXPECT_LT(unitarity_error(d), 1e-12);
    const CMatrix back = displacement_matrix(40, cplx(-0.3, 0.2));
    EXPECT_LT(max_abs(d * back - CMatrix::Identity(40, 40)), 1e-12);
    EXPECT_LT(max_abs(displacement_matrix(10, 0.0) - CMatrix::Identity(10, 10)), 1e-15);
}

TEST(QuditGates, GivensInverseUndoes) {
    QuditCircuit c(1, 24);
    c.add(QuditGate::givens(QuditGateKind::kRx, 0, 3, 7, 0.4));
    c.add(QuditGate::givens(QuditGateKind::kRy, 0, 9, 2, -1.2));
    c.add(QuditGate::givens(QuditGateKind::kX, 0, 1, 5));
    QuditCircuit round = c;
    round.append(c.inverse());
    EXPECT_LT(max_abs(unitary_of(round) - CMatrix::Identity(24, 24)), 1e-12);
}

TEST(QuditGates, RejectsBadLevels) {
    QuditCircuit c(1, 24);
    EXPECT_THROW(c.add(QuditGate::givens(QuditGateKind::kRx, 0, 3, 3, 0.1)), Error);
    EXPECT_THROW(c.add(QuditGate::givens(QuditGateKind::kRx, 0, 3, 24, 0.1)), Error);
    EXPECT_THROW(c.add(QuditGate::snap(0, std::vector<double>(5, 0.0))), Error);
}

TEST(QuditPrimitives, Inversion) {
    const QuditCircuit c = build_inversion_qudit();
    EXPECT_TRUE(check_inversion_qudit(c).ok());
    EXPECT_EQ(c.count(QuditGateKind::kX), 11u);
}

TEST(QuditPrimitives, TraceBothForms) {
    for (double theta : {0.0, 0.7, -1.9}) {
        EXPECT_TRUE(check_trace_qudit(build_trace_qudit(theta), theta).ok());
        EXPECT_TRUE(check_trace_qudit(build_trace_snap(theta), theta).ok());
    }
    EXPECT_EQ(build_trace_snap(0.7).size(), 1u);
}

TEST(QuditPrimitives, VgDiagonalizesEveryLeftPermutation) {
    for (GroupIndex g : all_elements()) {
        const VgCheck r = check_vg(g);
        EXPECT_LT(r.offdiagonal, kDiagonalTol) << g.value();
        EXPECT_LT(r.eigenphase_error, 1e-8) << g.value();
        EXPECT_LT(unitarity_error(vg_matrix(g)), 1e-10);
    }
}

TEST(QuditPrimitives, MultiplicationSequenceCoversGroup) {
    const auto seq = multiplication_sequence();
    EXPECT_EQ(seq.size(), 23u);
    std::vector<int> seen(24, 0);
    for (GroupIndex g : seq) ++seen[static_cast<std::size_t>(g.value())];
    EXPECT_EQ(seen[0], 0);
    for (int g = 1; g < 24; ++g) EXPECT_EQ(seen[static_cast<std::size_t>(g)], 1);
}

TEST(QuditPrimitives, Multiplication) {
    const QuditCircuit c = build_multiplication_qudit();
    EXPECT_EQ(c.wires(), 2);
    EXPECT_EQ(c.count(QuditGateKind::kCSnap), 23u);
    const QuditCheck r = check_multiplication_qudit(c);
    EXPECT_EQ(r.checked, 576u);
    EXPECT_TRUE(r.ok()) << r.max_error;
}

TEST(QuditPrimitives, Fourier) {
    EXPECT_TRUE(check_fourier_qudit(build_fourier_qudit()).ok());
}

TEST(QuditPrimitives, RotationCountsAreConsistent) {
    const VgRotationReport r = count_vg_rotations();
    int elements = 0;
    for (const VgRotationRow &row : r.rows) elements += row.elements;
    EXPECT_EQ(elements, 24);
    EXPECT_EQ(r.csnaps, 23);
    EXPECT_GT(r.realized_circuit, 0);
    EXPECT_EQ(r.published_quoted, 2244);
}

TEST(EulerBlocks, EveryDesignDiagonalizesTheShift) {
    for (EulerKind k : {EulerKind::kU2, EulerKind::kU3, EulerKind::kU4, EulerKind::kU6}) {
        const EulerBlockDesign &d = euler_design(k);
        EXPECT_LT(shift_offdiagonal(d.ops, euler_size(k)), kDiagonalTol) << euler_name(k);
        EXPECT_LT(unitarity_error(givens_product(d.ops, euler_size(k))), 1e-12);
    }
    EXPECT_GE(euler_block_log().size(), 4u);
}

TEST(EulerBlocks, KindForOrder) {
    EXPECT_EQ(euler_kind_for_order(2), EulerKind::kU2);
    EXPECT_EQ(euler_kind_for_order(3), EulerKind::kU3);
    EXPECT_EQ(euler_kind_for_order(4), EulerKind::kU4);
    EXPECT_EQ(euler_kind_for_order(6), EulerKind::kU6);
    EXPECT_THROW(euler_kind_for_order(5), Error);
}

TEST(EulerBlocks, GivensDecompositionReconstructs) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    for (int m : {2, 3, 6}) {
        CMatrix a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = cplx(n(rng), n(rng));
        const CMatrix u = a.householderQr().householderQ();
        const GivensDecomposition g = givens_decompose(u);
        CMatrix d = CMatrix::Zero(m, m);
        for (int i = 0; i < m; ++i) d(i, i) = std::polar(1.0, g.phases[static_cast<std::size_t>(i)]);
        EXPECT_LT(max_abs(givens_product(g.ops, m) * d - u), 1e-10);
    }
}

TEST(Snap, ZeroAnsatzIsIdentityAndMatchesCircuit) {
    SnapDisplacementAnsatz a;
    a.truncation = 32;
    a.thetas.assign(2, std::vector<double>(kSnapLevels, 0.0));
    a.alphas.assign(3, cplx(0.0, 0.0));
    EXPECT_LT(subspace_infidelity(CMatrix::Identity(24, 24), a), 1e-14);
    a.alphas = {cplx(0.1, 0.2), cplx(-0.3, 0.0), cplx(0.05, -0.1)};
    a.thetas[0][3] = 0.4;
    a.thetas[1][7] = -1.1;
    EXPECT_LT(max_abs(ansatz_unitary(a) - unitary_of(ansatz_circuit(a))), 1e-10);
}

TEST(Snap, IdentityAndSingleSnapCompileExactly) {
    SnapCompileOptions o;
    o.truncation = 32;
    o.restarts = 1;
    const SnapCompileResult id = compile_snap_displacement(CMatrix::Identity(24, 24), 1, o);
    EXPECT_LT(id.infidelity, 1e-10);
    CMatrix diag = CMatrix::Zero(24, 24);
    for (int k = 0; k < 24; ++k) diag(k, k) = std::polar(1.0, 0.1 * k * k);
    const SnapCompileResult s = compile_snap_displacement(diag, 1, o);
    EXPECT_LT(s.infidelity, 1e-10);
    EXPECT_LT(s.truncation_error, 1e-8);
}

TEST(Snap, TextHasOneLinePerLayer) {
    SnapDisplacementAnsatz a;
    a.truncation = 32;
    a.thetas.assign(3, std::vector<double>(kSnapLevels, 0.25));
    a.alphas.assign(4, cplx(0.5, -0.5));
    const std::string text = ansatz_to_text(a, 0.01);
    int data = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string line = text.substr(pos, end - pos);
        if (!line.empty() && line[0] != '#') ++data;
        pos = end == std::string::npos ? text.size() : end + 1;
    }
    EXPECT_EQ(data, 4);
}

TEST(Snap, RejectsBadInput) {
    EXPECT_THROW(compile_snap_displacement(CMatrix::Identity(5, 5), 1), Error);
    EXPECT_THROW(compile_snap_displacement(CMatrix::Identity(24, 24), 0), Error);
    SnapCompileOptions o;
    o.truncation = 24;
    EXPECT_THROW(compile_snap_displacement(CMatrix::Identity(24, 24), 1, o), Error);
    CMatrix bad = CMatrix::Identity(24, 24);
    bad(0, 1) = 1.0;
    EXPECT_THROW(compile_snap_displacement(bad, 1), Error);
}

}  // namespace
}  // namespace btg
