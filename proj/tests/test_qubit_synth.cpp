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

#include <bit>
#include <random>

#include "group.hpp"
#include "lowering.hpp"
#include "qubit_synth.hpp"
#include "routing.hpp"

namespace btg {
namespace {

TEST(Inversion, MapsEveryElementToItsInverse) {
    const SubspaceCheck r = check_inversion(build_inversion());
    EXPECT_EQ(r.checked, 24u);
    EXPECT_TRUE(r.ok());
}

TEST(Inversion, IsPermutationOfFullSpace) {
    const CMatrix u = unitary_of(build_inversion());
    for (int c = 0; c < 32; ++c) {
        int ones = 0;
        for (int r = 0; r < 32; ++r) {
            if (std::abs(u(r, c)) > 1e-9) {
                EXPECT_NEAR(std::abs(u(r, c)), 1.0, 1e-12);
                ++ones;
            }
        }
        EXPECT_EQ(ones, 1);
    }
}

TEST(Inversion, IsAnInvolutionOnValidStates) {
    QubitCircuit twice = build_inversion();
    twice.append(build_inversion());
    const CMatrix u = unitary_of(twice);
    for (int g = 0; g < 24; ++g) EXPECT_NEAR(std::abs(u(g, g)), 1.0, 1e-12);
}

TEST(Multiplication, AllPairsAndControlPreserved) {
    const QubitCircuit c = build_multiplication();
    EXPECT_EQ(c.wires(), 10);
    const SubspaceCheck r = check_multiplication(c);
    EXPECT_EQ(r.checked, 576u);
    EXPECT_TRUE(r.ok());
}

TEST(Multiplication, QuaternionExample) {
    CVector s = CVector::Zero(1024);
    s(2 + 32 * 4) = 1.0;
    const CVector out = btg::apply(build_multiplication(), s);
    EXPECT_NEAR(std::abs(out(2 + 32 * 6)), 1.0, 1e-12);
}

TEST(Trace, PhasesForSeveralAngles) {
    for (double theta : {0.0, 0.3, 0.7, 1.1, -2.5}) {
        const SubspaceCheck r = check_trace(build_trace(theta), theta);
        EXPECT_EQ(r.checked, 24u);
        EXPECT_TRUE(r.ok()) << theta;
    }
}

TEST(Trace, ZeroAngleIsIdentityUpToPhase) {
    EXPECT_LT(phase_distance(unitary_of(build_trace(0.0)), CMatrix::Identity(32, 32)), 1e-12);
}

TEST(Trace, RelativePhaseExample) {
    const CMatrix u = unitary_of(build_trace(0.7));
    for (int g = 1; g < 24; ++g) {
        const cplx rel = u(g, g) / u(0, 0);
        EXPECT_NEAR(std::abs(rel - std::polar(1.0, 0.7 * (re_trace(GroupIndex(g)) - 2))), 0.0, 1e-12);
    }
}

TEST(Trace, CommutesWithInversionOnValidStates) {
    const CMatrix t = unitary_of(build_trace(0.9)), i = unitary_of(build_inversion());
    const CMatrix a = t * i, b = i * t;
    for (int g = 0; g < 24; ++g)
        for (int h = 0; h < 24; ++h) EXPECT_NEAR(std::abs(a(h, g) - b(h, g)), 0.0, 1e-12);
}

TEST(Trace, ParityTermsReproduceReTrace) {
    const auto terms = trace_parity_terms();
    for (int g = 0; g < 24; ++g) {
        double v = 0.0;
        for (const ParityTerm &t : terms) v += t.coefficient * ((std::popcount(t.mask & static_cast<std::uint32_t>(g)) & 1) ? -1.0 : 1.0);
        EXPECT_NEAR(v, re_trace(GroupIndex(g)), 1e-12);
    }
}

TEST(Fourier, UnitaryAndLayout) {
    const CMatrix f = build_fourier_unitary();
    EXPECT_LT(unitarity_error(f), 1e-12);
    for (int g = 0; g < 24; ++g) EXPECT_NEAR(std::abs(f(0, g) - 1.0 / std::sqrt(24.0)), 0.0, 1e-14);
    const CMatrix fm = fourier_matrix();
    int row = 0;
    for (int r = 0; r < kIrrepCount; ++r) {
        const int d = irrep_dimension(irrep_from_index(r));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j, ++row)
                EXPECT_NEAR(std::abs(fm(row, 0) - (i == j ? std::sqrt(d / 24.0) : 0.0)), 0.0, 1e-14);
    }
    EXPECT_LT(max_abs(f.bottomRightCorner(8, 8) - CMatrix::Identity(8, 8)), 1e-15);
}

TEST(Fourier, RoundTripAndPlancherel) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> d;
    for (int k = 0; k < 20; ++k) {
        CVector f(24);
        for (int g = 0; g < 24; ++g) f(g) = cplx(d(rng), d(rng));
        f.normalize();
        EXPECT_LT((fourier_roundtrip(f) - f).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(fourier_transform(f).norm(), 1.0, 1e-12);
        EXPECT_LT((fourier_transform(f) - fourier_matrix() * f).cwiseAbs().maxCoeff(), 1e-12);
    }
    CVector delta = CVector::Zero(24);
    delta(0) = 1.0;
    EXPECT_LT((fourier_roundtrip(delta) - delta).norm(), 1e-12);
}

TEST(Fourier, BlockDiagonalizesLeftRegularRepresentation) {
    const CMatrix f = fourier_matrix();
    for (int g = 0; g < 24; ++g) {
        CMatrix p = CMatrix::Zero(24, 24);
        for (int h = 0; h < 24; ++h) p(multiply_oracle(GroupIndex(g), GroupIndex(h)).value(), h) = 1.0;
        const CMatrix b = f * p * f.adjoint();
        int offset = 0;
        for (int r = 0; r < kIrrepCount; ++r) {
            const int size = irrep_dimension(irrep_from_index(r)) * irrep_dimension(irrep_from_index(r));
            for (int i = offset; i < offset + size; ++i)
                for (int j = 0; j < 24; ++j)
                    if (j < offset || j >= offset + size) EXPECT_NEAR(std::abs(b(i, j)), 0.0, 1e-12);
            offset += size;
        }
    }
}

TEST(Fourier, SynthesizedCircuitMatches) {
    const QubitCircuit c = build_fourier_circuit();
    EXPECT_TRUE(check_fourier(c).ok());
    QubitCircuit round = c;
    round.append(c.inverse());
    EXPECT_LT(phase_distance(unitary_of(round), CMatrix::Identity(32, 32)), 1e-9);
}

TEST(ReferenceCounts, LoweredAndRoutedPrimitives) {
    const QubitCircuit trace = lower_to_cnot(build_trace(0.7));
    const QubitCircuit inv = lower_to_cnot(build_inversion());
    EXPECT_EQ(inv.count(QubitGateKind::kCnot), static_cast<std::size_t>(ReferenceCounts::kInversionCnots));
    EXPECT_LE(trace.count(QubitGateKind::kCnot), static_cast<std::size_t>(ReferenceCounts::kTraceCnots));
    const RoutedCircuit rt = route_best(trace, CouplingGraph::nairobi());
    const RoutedCircuit ri = route_best(inv, CouplingGraph::nairobi());
    EXPECT_LT(routing_equivalence_error(trace, rt), 1e-10);
    EXPECT_LT(routing_equivalence_error(inv, ri), 1e-10);
    EXPECT_NEAR(static_cast<double>(routed_cnot_count(ri)), ReferenceCounts::kInversionRoutedCnots, 0.2 * ReferenceCounts::kInversionRoutedCnots);
}

}  // namespace
}  // namespace btg
