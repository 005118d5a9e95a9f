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

#include "qubit_synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "synthesis.hpp"

namespace btg {

namespace {

using K = QubitGateKind;

constexpr int kM = 0, kN = 1, kO = 2, kP = 3, kQ = 4;

// Column k of the circuit unitary for each basis index k in `basis`.
CMatrix columns(const QubitCircuit &c, const std::vector<int> &basis) { return columns_of(c, basis); }

// Records whether column j is e^{i phi} |expected_j> with phi shared by all
// columns (the first column fixes phi).
SubspaceCheck check_columns(const CMatrix &cols, const std::vector<int> &expected, const std::vector<cplx> &phases,
                            double tol) {
    SubspaceCheck r;
    cplx global = 0.0;
    for (std::size_t j = 0; j < expected.size(); ++j) {
        const auto col = cols.col(static_cast<Eigen::Index>(j));
        const cplx amp = col(expected[j]) / phases[j];
        if (j == 0) global = amp / std::abs(amp);
        CVector want = CVector::Zero(col.size());
        want(expected[j]) = global * phases[j];
        const double err = (col - want).cwiseAbs().maxCoeff();
        r.max_error = std::max(r.max_error, err);
        ++r.checked;
        if (err < tol) ++r.correct;
    }
    return r;
}

}  // namespace

QubitCircuit build_inversion() {
    QubitCircuit c(kRegisterWires, "inversion");
    c.set_source("inversion");
    // (-1)^m picks up the sign of the reordered i^n j^o.
    c.add(QubitGate::cnot(kN, kM));
    c.add(QubitGate::cnot(kO, kM));
    c.add(QubitGate::toffoli(kN, kO, kM));
    // Conjugate i^n j^o by l^(p + 2q).
    c.add(QubitGate::toffoli(kP, kN, kO));
    c.add(QubitGate::toffoli(kQ, kO, kN));
    c.add(QubitGate::cnot(kQ, kP));
    c.add(QubitGate::cswap(kP, kN, kO));
    c.add(QubitGate::cnot(kQ, kP));
    // l^e -> l^-e
    c.add(QubitGate::swap(kP, kQ));
    return c;
}

QubitCircuit build_multiplication() {
    QubitCircuit c(2 * kRegisterWires, "multiplication");
    c.set_source("multiplication");
    const int m0 = kM, n0 = kN, o0 = kO, p0 = kP, q0 = kQ;
    const int m1 = kM + 5, n1 = kN + 5, o1 = kO + 5, p1 = kP + 5, q1 = kQ + 5;
    // Move l^(e0) through i^(n1) j^(o1).
    c.add(QubitGate::toffoli(p0, o1, n1));
    c.add(QubitGate::toffoli(q0, n1, o1));
    c.add(QubitGate::cnot(q0, p0));
    c.add(QubitGate::cswap(p0, n1, o1));
    c.add(QubitGate::cnot(q0, p0));
    // e1 += e0 mod 3
    c.add(QubitGate::cchi(p0, p1, q1));
    c.add(QubitGate::cchi_inv(q0, p1, q1));
    // j^(o0) i^(n1) j^(o1) = (-1)^(n1 o0) i^(n1) j^(o0 + o1), with j^2 = -1.
    c.add(QubitGate::toffoli(o0, n1, m1));
    c.add(QubitGate::toffoli(o0, o1, m1));
    c.add(QubitGate::cnot(o0, o1));
    // i^(n0) i^(n1), with i^2 = -1.
    c.add(QubitGate::toffoli(n0, n1, m1));
    c.add(QubitGate::cnot(n0, n1));
    c.add(QubitGate::cnot(m0, m1));
    return c;
}

std::vector<ParityTerm> trace_parity_terms() {
    std::array<double, kRegisterDim> f{};
    for (int x = 0; x < kRegisterDim; ++x)
        f[static_cast<std::size_t>(x)] =
            x < kGroupOrder ? re_trace(GroupIndex(x)) : ((x & 1) ? 1.0 : -1.0);
    std::vector<ParityTerm> terms;
    for (std::uint32_t s = 1; s < kRegisterDim; ++s) {
        double c = 0.0;
        for (std::uint32_t x = 0; x < kRegisterDim; ++x)
            c += (std::popcount(s & x) % 2 ? -1.0 : 1.0) * f[x];
        c /= kRegisterDim;
        if (std::abs(c) > 1e-12) terms.push_back({s, c});
    }
    return terms;
}

QubitCircuit build_trace(double theta) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::kInvalidArgument, "trace angle must be finite");
    QubitCircuit c(kRegisterWires, "trace");
    c.set_source("trace");
    std::vector<ParityTerm> terms = trace_parity_terms();
    // Every term contains m; wire m accumulates each parity in turn. Visit
    // the parities in the order with the fewest CNOTs, starting and ending at {m}.
    auto start = std::find_if(terms.begin(), terms.end(), [](const ParityTerm &t) { return t.mask == 1U; });
    if (start != terms.end()) std::iter_swap(terms.begin(), start);
    std::vector<std::size_t> order(terms.size()), best;
    std::iota(order.begin(), order.end(), 0);
    int best_cost = -1;
    auto cost_of = [&](const std::vector<std::size_t> &o) {
        std::uint32_t cur = 1;
        int cost = 0;
        for (std::size_t k : o) {
            cost += std::popcount(cur ^ terms[k].mask);
            cur = terms[k].mask;
        }
        return cost + std::popcount(cur ^ 1U);
    };
    const auto first = order.begin() + (start != terms.end() ? 1 : 0);
    do {
        const int cost = cost_of(order);
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best = order;
        }
    } while (std::next_permutation(first, order.end()));

    std::uint32_t cur = 1;
    auto move_to = [&](std::uint32_t mask) {
        for (int w = 1; w < kRegisterWires; ++w)
            if (((cur ^ mask) >> w) & 1U) c.add(QubitGate::cnot(w, kM));
        cur = mask;
    };
    for (std::size_t k : best) {
        move_to(terms[k].mask);
        // RZ(phi) gives e^{-i phi/2 (-1)^b} on parity b.
        const double phi = -2.0 * theta * terms[k].coefficient;
        if (std::abs(phi) > 0.0) c.add(QubitGate::rotation(K::kRz, kM, phi));
    }
    move_to(1U);
    return c;
}

CMatrix fourier_matrix() {
    CMatrix u(kGroupOrder, kGroupOrder);
    Eigen::Index row = 0;
    for (int r = 0; r < kIrrepCount; ++r) {
        const Irrep rho = irrep_from_index(r);
        const int d = irrep_dimension(rho);
        const double scale = std::sqrt(d / 24.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j, ++row)
                for (GroupIndex g : all_elements()) u(row, g.value()) = scale * irrep(rho, g)(i, j);
    }
    return u;
}

CMatrix build_fourier_unitary() {
    CMatrix u = CMatrix::Identity(kRegisterDim, kRegisterDim);
    u.topLeftCorner(kGroupOrder, kGroupOrder) = fourier_matrix();
    return u;
}

QubitCircuit build_fourier_circuit() {
    QubitCircuit c = synthesize_unitary(build_fourier_unitary());
    c.set_name("fourier");
    c.set_source("fourier");
    return c;
}

CVector fourier_transform(const CVector &f) {
    if (f.size() != kGroupOrder) throw Error(ErrorCode::kDimension, "Fourier transform needs 24 amplitudes");
    CVector out = CVector::Zero(kGroupOrder);
    Eigen::Index row = 0;
    for (int r = 0; r < kIrrepCount; ++r) {
        const Irrep rho = irrep_from_index(r);
        const int d = irrep_dimension(rho);
        const double scale = std::sqrt(d / 24.0);
        for (GroupIndex g : all_elements()) {
            const CMatrix m = irrep(rho, g);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) out(row + i * d + j) += scale * m(i, j) * f(g.value());
        }
        row += d * d;
    }
    return out;
}

CVector inverse_fourier_transform(const CVector &fhat) {
    if (fhat.size() != kGroupOrder) throw Error(ErrorCode::kDimension, "Fourier transform needs 24 amplitudes");
    CVector out = CVector::Zero(kGroupOrder);
    for (GroupIndex g : all_elements()) {
        Eigen::Index row = 0;
        for (int r = 0; r < kIrrepCount; ++r) {
            const Irrep rho = irrep_from_index(r);
            const int d = irrep_dimension(rho);
            const double scale = std::sqrt(d / 24.0);
            const CMatrix m = irrep(rho, g);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) out(g.value()) += scale * std::conj(m(i, j)) * fhat(row + i * d + j);
            row += d * d;
        }
    }
    return out;
}

CVector fourier_roundtrip(const CVector &f) { return inverse_fourier_transform(fourier_transform(f)); }

SubspaceCheck check_inversion(const QubitCircuit &c, double tol) {
    if (c.wires() < kRegisterWires) throw Error(ErrorCode::kDimension, "inversion circuit needs 5 wires");
    std::vector<int> basis, expected;
    for (GroupIndex g : all_elements()) {
        basis.push_back(g.value());
        expected.push_back(inverse_oracle(g).value());
    }
    return check_columns(columns(c, basis), expected, std::vector<cplx>(basis.size(), 1.0), tol);
}

SubspaceCheck check_multiplication(const QubitCircuit &c, double tol) {
    if (c.wires() < 2 * kRegisterWires) throw Error(ErrorCode::kDimension, "multiplication circuit needs 10 wires");
    std::vector<int> basis, expected;
    for (GroupIndex g : all_elements())
        for (GroupIndex h : all_elements()) {
            basis.push_back(g.value() + kRegisterDim * h.value());
            expected.push_back(g.value() + kRegisterDim * multiply_oracle(g, h).value());
        }
    return check_columns(columns(c, basis), expected, std::vector<cplx>(basis.size(), 1.0), tol);
}

SubspaceCheck check_trace(const QubitCircuit &c, double theta, double tol) {
    if (c.wires() < kRegisterWires) throw Error(ErrorCode::kDimension, "trace circuit needs 5 wires");
    std::vector<int> basis;
    std::vector<cplx> phases;
    for (GroupIndex g : all_elements()) {
        basis.push_back(g.value());
        phases.push_back(std::polar(1.0, theta * re_trace(g)));
    }
    return check_columns(columns(c, basis), basis, phases, tol);
}

SubspaceCheck check_fourier(const QubitCircuit &c, double tol) {
    if (c.wires() != kRegisterWires) throw Error(ErrorCode::kDimension, "Fourier circuit needs 5 wires");
    std::vector<int> basis(kGroupOrder);
    std::iota(basis.begin(), basis.end(), 0);
    const CMatrix got = columns(c, basis);
    const CMatrix want = build_fourier_unitary().leftCols(kGroupOrder);
    const cplx overlap = (want.adjoint() * got).trace();
    const cplx phase = overlap / std::abs(overlap);
    SubspaceCheck r;
    for (int j = 0; j < kGroupOrder; ++j) {
        const double err = (got.col(j) - phase * want.col(j)).cwiseAbs().maxCoeff();
        r.max_error = std::max(r.max_error, err);
        ++r.checked;
        if (err < tol) ++r.correct;
    }
    return r;
}

}  // namespace btg
