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

#include "synthesis.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "lowering.hpp"

namespace btg {

namespace {

using K = QubitGateKind;

void add_rotation(QubitCircuit &c, K axis, int wire, double theta) {
    if (std::abs(theta) > kSynthesisAngleTol) c.add(QubitGate::rotation(axis, wire, theta));
}

// u = e^{i phi} RZ(a) RY(b) RZ(c); emitted in time order RZ(c), RY(b), RZ(a).
void synthesize_one(QubitCircuit &out, const CMatrix &u, int wire) {
    if (phase_distance(u, CMatrix::Identity(2, 2)) < kSynthesisAngleTol) return;
    const cplx det = u.determinant();
    const CMatrix v = u / std::sqrt(det);
    const cplx x = v(0, 0), y = v(1, 0);
    const double b = 2.0 * std::atan2(std::abs(y), std::abs(x));
    double sum = 0.0, diff = 0.0;  // (a + c) / 2 and (a - c) / 2
    if (std::abs(x) > 1e-14) sum = -std::arg(x);
    if (std::abs(y) > 1e-14) diff = std::arg(y);
    if (std::abs(y) <= 1e-14) {
        add_rotation(out, K::kRz, wire, 2.0 * sum);
        return;
    }
    if (std::abs(x) <= 1e-14) {
        // Only a - c is fixed; choose c = 0.
        add_rotation(out, K::kRy, wire, b);
        add_rotation(out, K::kRz, wire, 2.0 * diff);
        return;
    }
    add_rotation(out, K::kRz, wire, sum - diff);
    add_rotation(out, K::kRy, wire, b);
    add_rotation(out, K::kRz, wire, sum + diff);
}

void synthesize_rec(QubitCircuit &out, const CMatrix &u, int n);

// diag(a, b) on wires 0..n-1 with the block selected by wire n-1:
// (I (x) V) (D (+) D^dagger) (I (x) W) with a = V D W and b = V D^dagger W.
void demultiplex(QubitCircuit &out, const CMatrix &a, const CMatrix &b, int n) {
    Eigen::ComplexSchur<CMatrix> schur(a * b.adjoint());
    const CMatrix v = schur.matrixU();
    const CVector lambda = schur.matrixT().diagonal();
    const CVector d = lambda.array().sqrt();
    const CMatrix w = d.asDiagonal() * v.adjoint() * b;
    synthesize_rec(out, w, n - 1);
    std::vector<int> controls(static_cast<std::size_t>(n - 1));
    std::iota(controls.begin(), controls.end(), 0);
    std::vector<double> angles(static_cast<std::size_t>(d.size()));
    for (Eigen::Index k = 0; k < d.size(); ++k) angles[static_cast<std::size_t>(k)] = -2.0 * std::arg(d(k));
    append_multiplexed_rotation(out, K::kRz, n - 1, controls, angles);
    synthesize_rec(out, v, n - 1);
}

void synthesize_rec(QubitCircuit &out, const CMatrix &u, int n) {
    if (n == 1) {
        synthesize_one(out, u, 0);
        return;
    }
    const Eigen::Index h = u.rows() / 2;
    if (phase_distance(u, CMatrix::Identity(u.rows(), u.cols())) < kSynthesisAngleTol) return;
    if (max_abs(u.topRightCorner(h, h)) < kSynthesisAngleTol && max_abs(u.bottomLeftCorner(h, h)) < kSynthesisAngleTol) {
        if (max_abs(u.topLeftCorner(h, h) - u.bottomRightCorner(h, h)) < kSynthesisAngleTol)
            synthesize_rec(out, u.topLeftCorner(h, h), n - 1);
        else
            demultiplex(out, u.topLeftCorner(h, h), u.bottomRightCorner(h, h), n);
        return;
    }
    CMatrix x11 = u.topLeftCorner(h, h), x12 = u.topRightCorner(h, h);
    CMatrix x21 = u.bottomLeftCorner(h, h), x22 = u.bottomRightCorner(h, h);
    CMatrix u1(h, h), u2(h, h), v1t(h, h), v2t(h, h);
    std::vector<double> theta(static_cast<std::size_t>(h));
    const auto ld = static_cast<lapack_int>(h);
    const lapack_int info = LAPACKE_zuncsd(LAPACK_COL_MAJOR, 'Y', 'Y', 'Y', 'Y', 'N', 'D', 2 * ld, ld, ld,
                                           x11.data(), ld, x12.data(), ld, x21.data(), ld, x22.data(), ld,
                                           theta.data(), u1.data(), ld, u2.data(), ld, v1t.data(), ld, v2t.data(), ld);
    if (info != 0) throw Error(ErrorCode::kInternal, "cosine-sine decomposition failed (info " + std::to_string(info) + ")");
    // u = diag(u1, u2) [[C, -S], [S, C]] diag(v1t, v2t)
    demultiplex(out, v1t, v2t, n);
    std::vector<int> controls(static_cast<std::size_t>(n - 1));
    std::iota(controls.begin(), controls.end(), 0);
    std::vector<double> angles(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) angles[k] = 2.0 * theta[k];
    append_multiplexed_rotation(out, K::kRy, n - 1, controls, angles);
    demultiplex(out, u1, u2, n);
}

}  // namespace

void append_multiplexed_rotation(QubitCircuit &c, QubitGateKind axis, int target, const std::vector<int> &controls,
                                 const std::vector<double> &angles) {
    const std::size_t k = controls.size();
    const std::size_t m = std::size_t{1} << k;
    if (angles.size() != m) throw Error(ErrorCode::kInvalidArgument, "multiplexed rotation needs 2^controls angles");
    if (k == 0) {
        add_rotation(c, axis, target, angles[0]);
        return;
    }
    // Step i applies alpha_i while the target has been flipped by the
    // controls in gray(i); the sign seen by control value j is
    // (-1)^{popcount(j & gray(i))}.
    std::vector<double> alpha(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t gi = i ^ (i >> 1);
        for (std::size_t j = 0; j < m; ++j)
            alpha[i] += (std::popcount(j & gi) % 2 ? -1.0 : 1.0) * angles[j];
        alpha[i] /= static_cast<double>(m);
    }
    for (std::size_t i = 0; i < m; ++i) {
        add_rotation(c, axis, target, alpha[i]);
        const std::size_t g0 = i ^ (i >> 1), i1 = (i + 1) % m, g1 = i1 ^ (i1 >> 1);
        const int bit = std::countr_zero(g0 ^ g1);
        c.add(QubitGate::cnot(controls[static_cast<std::size_t>(bit)], target));
    }
}

QubitCircuit synthesize_unitary(const CMatrix &u) {
    if (u.rows() != u.cols() || u.rows() < 2 || !std::has_single_bit(static_cast<std::size_t>(u.rows())))
        throw Error(ErrorCode::kDimension, "synthesis needs a 2^n x 2^n matrix");
    const int n = std::countr_zero(static_cast<std::size_t>(u.rows()));
    if (n > kMaxSynthesisQubits) throw Error(ErrorCode::kDimension, "synthesis limited to 6 qubits");
    if (!is_unitary(u, 1e-9)) throw Error(ErrorCode::kNotUnitary, "input matrix is not unitary");
    QubitCircuit out(n);
    synthesize_rec(out, u, n);
    return cancel_adjacent(out);
}

SynthesisCounts synthesis_counts(const QubitCircuit &c) {
    return {c.count(K::kCnot), c.count(K::kRy), c.count(K::kRz)};
}

}  // namespace btg
