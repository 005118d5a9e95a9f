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

#include "qudit_synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace btg {

namespace {

using K = QuditGateKind;

QuditCheck compare_columns(const CMatrix &got, const CMatrix &want, double tol) {
    QuditCheck r;
    const cplx overlap = (want.adjoint() * got).trace();
    const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
    for (Eigen::Index j = 0; j < got.cols(); ++j) {
        const double err = (got.col(j) - phase * want.col(j)).cwiseAbs().maxCoeff();
        r.max_error = std::max(r.max_error, err);
        ++r.checked;
        if (err < tol) ++r.correct;
    }
    return r;
}

std::vector<int> cycle_levels(const std::vector<GroupIndex> &cycle) {
    std::vector<int> out;
    for (GroupIndex h : cycle) out.push_back(h.value());
    return out;
}

void append_vg(QuditCircuit &c, GroupIndex g, int wire, bool adjoint) {
    for (const auto &cycle : left_permutation(g).cycles()) {
        if (cycle.size() < 2) continue;
        const EulerKind kind = euler_kind_for_order(static_cast<int>(cycle.size()));
        append_block(c, euler_design(kind), cycle_levels(cycle), wire, adjoint);
    }
}

}  // namespace

QuditCircuit build_inversion_qudit() {
    QuditCircuit c(1, kQuditDim, "inversion");
    for (GroupIndex g : all_elements()) {
        const GroupIndex gi = inverse_oracle(g);
        if (g < gi) c.add(QuditGate::givens(K::kX, 0, g.value(), gi.value()));
    }
    return c;
}

QuditCircuit build_trace_qudit(double theta) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::kInvalidArgument, "trace angle must be finite");
    QuditCircuit c(1, kQuditDim, "trace");
    for (int a = 0; a < kQuditDim; a += 2) {
        const int t = re_trace(GroupIndex(a));
        // Re Tr(-g) = -Re Tr(g); RZ(phi) puts e^{-i phi/2} on 2a and e^{+i phi/2} on 2a+1.
        if (t != 0) c.add(QuditGate::givens(K::kRz, 0, a, a + 1, -2.0 * theta * t));
    }
    return c;
}

QuditCircuit build_trace_snap(double theta) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::kInvalidArgument, "trace angle must be finite");
    std::vector<double> phases;
    for (GroupIndex g : all_elements()) phases.push_back(theta * re_trace(g));
    QuditCircuit c(1, kQuditDim, "trace_snap");
    c.add(QuditGate::snap(0, std::move(phases)));
    return c;
}

QuditCircuit build_vg(GroupIndex g) {
    QuditCircuit c(1, kQuditDim, "V" + std::to_string(g.value()));
    append_vg(c, g, 0, false);
    return c;
}

CMatrix vg_matrix(GroupIndex g) { return unitary_of(build_vg(g)); }

CMatrix permutation_matrix(GroupIndex g) {
    CMatrix p = CMatrix::Zero(kQuditDim, kQuditDim);
    const Permutation24 perm = left_permutation(g);
    for (int h = 0; h < kQuditDim; ++h) p(perm.image[static_cast<std::size_t>(h)].value(), h) = 1.0;
    return p;
}

VgCheck check_vg(GroupIndex g) {
    const CMatrix v = vg_matrix(g);
    const CMatrix d = v.adjoint() * permutation_matrix(g) * v;
    VgCheck r;
    r.offdiagonal = offdiagonal_max(d);
    // Expected: each m-th root of unity 24/m times. Compare sorted phases.
    const int m = element_order(g);
    std::vector<double> got, want;
    for (int k = 0; k < kQuditDim; ++k) got.push_back(std::arg(d(k, k)));
    for (int k = 0; k < kQuditDim; ++k) want.push_back(std::arg(std::polar(1.0, 2 * std::numbers::pi * (k % m) / m)));
    auto canon = [](double x) { return std::abs(x + std::numbers::pi) < 1e-9 ? std::numbers::pi : x; };
    for (auto &x : got) x = canon(x);
    for (auto &x : want) x = canon(x);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    for (int k = 0; k < kQuditDim; ++k)
        r.eigenphase_error = std::max(r.eigenphase_error, std::abs(got[static_cast<std::size_t>(k)] - want[static_cast<std::size_t>(k)]));
    return r;
}

std::vector<GroupIndex> multiplication_sequence() {
    std::vector<GroupIndex> seq;
    std::vector<bool> used(kQuditDim, false);
    used[0] = true;
    for (GroupIndex g : all_elements()) {
        if (used[static_cast<std::size_t>(g.value())]) continue;
        seq.push_back(g);
        used[static_cast<std::size_t>(g.value())] = true;
        const GroupIndex gi = inverse_oracle(g);
        if (!used[static_cast<std::size_t>(gi.value())]) {
            seq.push_back(gi);
            used[static_cast<std::size_t>(gi.value())] = true;
        }
    }
    return seq;
}

QuditCircuit build_multiplication_qudit() {
    QuditCircuit c(2, kQuditDim, "multiplication");
    const auto seq = multiplication_sequence();
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const GroupIndex g = seq[k];
        const bool shares_prev = k > 0 && seq[k - 1] == inverse_oracle(g);
        const bool shares_next = k + 1 < seq.size() && seq[k + 1] == inverse_oracle(g);
        // P_g = V_g D_g V_g^dagger; V_{g^-1} = V_g, so the pair shares one basis change.
        if (!shares_prev) append_vg(c, g, 1, true);
        const GroupIndex basis = shares_prev ? seq[k - 1] : g;
        std::vector<double> phases;
        {
            const CMatrix v = vg_matrix(basis);
            const CMatrix d = v.adjoint() * permutation_matrix(g) * v;
            for (int j = 0; j < kQuditDim; ++j) phases.push_back(std::arg(d(j, j)));
        }
        c.add(QuditGate::csnap(0, g.value(), 1, std::move(phases)));
        if (!shares_next) append_vg(c, basis, 1, false);
    }
    return c;
}

QuditCircuit build_fourier_qudit() {
    const GivensDecomposition gd = givens_decompose(fourier_matrix());
    QuditCircuit c(1, kQuditDim, "fourier");
    c.add(QuditGate::snap(0, gd.phases));
    for (auto it = gd.ops.rbegin(); it != gd.ops.rend(); ++it) c.add(QuditGate::givens(it->axis, 0, it->a, it->b, it->angle));
    return c;
}

QuditCheck check_inversion_qudit(const QuditCircuit &c, double tol) {
    CMatrix want = CMatrix::Zero(kQuditDim, kQuditDim);
    for (GroupIndex g : all_elements()) want(inverse_oracle(g).value(), g.value()) = 1.0;
    return compare_columns(unitary_of(c), want, tol);
}

QuditCheck check_trace_qudit(const QuditCircuit &c, double theta, double tol) {
    CMatrix want = CMatrix::Zero(kQuditDim, kQuditDim);
    for (GroupIndex g : all_elements()) want(g.value(), g.value()) = std::polar(1.0, theta * re_trace(g));
    return compare_columns(unitary_of(c), want, tol);
}

QuditCheck check_multiplication_qudit(const QuditCircuit &c, double tol) {
    const int n = kQuditDim * kQuditDim;
    CMatrix want = CMatrix::Zero(n, n);
    for (GroupIndex g : all_elements())
        for (GroupIndex h : all_elements())
            want(g.value() + kQuditDim * multiply_oracle(g, h).value(), g.value() + kQuditDim * h.value()) = 1.0;
    return compare_columns(unitary_of(c), want, tol);
}

QuditCheck check_fourier_qudit(const QuditCircuit &c, double tol) {
    return compare_columns(unitary_of(c), fourier_matrix(), tol);
}

VgRotationReport count_vg_rotations() {
    VgRotationReport r;
    const std::map<int, std::pair<int, int>> published{{1, {0, 0}}, {2, {3, 36}}, {3, {8, 64}}, {4, {15, 90}}, {6, {35, 140}}};
    for (const auto &[order, counts] : published) {
        VgRotationRow row;
        row.order = order;
        row.qft_published = counts.first;
        row.vg_published = counts.second;
        for (GroupIndex g : all_elements())
            if (element_order(g) == order) {
                ++row.elements;
                row.vg_realized = static_cast<int>(build_vg(g).givens_count());
            }
        row.qft_realized = order == 1 ? 0 : static_cast<int>(euler_design(euler_kind_for_order(order)).ops.size());
        r.rows.push_back(row);
    }
    for (const auto &row : r.rows) {
        r.published_unmerged += row.elements * row.vg_published;
        r.realized_unmerged += row.elements * row.vg_realized;
        // Self-inverse elements need V and V^dagger; an inverse pair shares one V and one V^dagger.
        const int uses = row.order == 2 ? 2 * row.elements : row.elements;
        r.published_merged += uses * row.vg_published;
        r.realized_merged += uses * row.vg_realized;
    }
    const QuditCircuit mult = build_multiplication_qudit();
    r.realized_circuit = static_cast<int>(mult.givens_count());
    r.csnaps = static_cast<int>(mult.count(K::kCSnap));
    return r;
}

}  // namespace btg
