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

#include "lowering.hpp"

#include <algorithm>
#include <cmath>

namespace btg {

namespace {

using K = QubitGateKind;

void emit_toffoli(std::vector<QubitGate> &out, int a, int b, int c) {
    auto one = [&](K k, int w) { out.push_back(QubitGate::single(k, w)); };
    auto cx = [&](int x, int y) { out.push_back(QubitGate::cnot(x, y)); };
    one(K::kH, c);
    cx(b, c);
    one(K::kTdg, c);
    cx(a, c);
    one(K::kT, c);
    cx(b, c);
    one(K::kTdg, c);
    cx(a, c);
    one(K::kT, b);
    one(K::kT, c);
    one(K::kH, c);
    cx(a, b);
    one(K::kT, a);
    one(K::kTdg, b);
    cx(a, b);
}

// Wraps the open controls of `g` in X gates around `body`.
template <class Body>
void with_open_controls(std::vector<QubitGate> &out, const QubitGate &g, Body &&body) {
    for (std::size_t k = 0; k < g.controls.size(); ++k)
        if (!g.polarity[k]) out.push_back(QubitGate::single(K::kX, g.controls[k]));
    body();
    for (std::size_t k = 0; k < g.controls.size(); ++k)
        if (!g.polarity[k]) out.push_back(QubitGate::single(K::kX, g.controls[k]));
}

void emit_mcx(std::vector<QubitGate> &out, const std::vector<int> &c, int t, int first_ancilla) {
    const int n = static_cast<int>(c.size());
    if (n == 1) {
        out.push_back(QubitGate::cnot(c[0], t));
        return;
    }
    if (n == 2) {
        emit_toffoli(out, c[0], c[1], t);
        return;
    }
    // a[k] for k = 0..n-3; controls c[0..n-1].
    auto a = [&](int k) { return first_ancilla + k; };
    std::vector<std::array<int, 3>> ladder;  // from the target inwards
    ladder.push_back({c[n - 1], a(n - 3), t});
    for (int k = n - 2; k >= 2; --k) ladder.push_back({c[k], a(k - 2), a(k - 1)});
    const std::array<int, 3> base{c[0], c[1], a(0)};
    auto tof = [&](const std::array<int, 3> &x) { emit_toffoli(out, x[0], x[1], x[2]); };
    for (const auto &x : ladder) tof(x);
    tof(base);
    for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) tof(*it);
    for (std::size_t k = 1; k < ladder.size(); ++k) tof(ladder[k]);
    tof(base);
    for (std::size_t k = ladder.size() - 1; k >= 1; --k) tof(ladder[k]);
}

void emit_cswap(std::vector<QubitGate> &out, int c, int a, int b) {
    out.push_back(QubitGate::cnot(b, a));
    emit_toffoli(out, c, a, b);
    out.push_back(QubitGate::cnot(b, a));
}

bool is_diagonal_1q(K k) { return k == K::kZ || k == K::kS || k == K::kSdg || k == K::kT || k == K::kTdg || k == K::kRz; }

bool disjoint(const QubitGate &a, const QubitGate &b) {
    for (int x : a.wires())
        for (int y : b.wires())
            if (x == y) return false;
    return true;
}

bool plain_cnot(const QubitGate &g) { return g.kind == K::kCnot && g.polarity[0]; }

bool commute(const QubitGate &a, const QubitGate &b) {
    if (disjoint(a, b)) return true;
    if (plain_cnot(a) && plain_cnot(b))
        return a.controls[0] != b.targets[0] && b.controls[0] != a.targets[0];
    auto one_way = [](const QubitGate &s, const QubitGate &cx) {
        if (!plain_cnot(cx) || s.targets.size() != 1 || !s.controls.empty()) return false;
        if (is_diagonal_1q(s.kind)) return s.targets[0] == cx.controls[0];
        if (s.kind == K::kX || s.kind == K::kRx) return s.targets[0] == cx.targets[0];
        return false;
    };
    if (one_way(a, b) || one_way(b, a)) return true;
    if (a.controls.empty() && b.controls.empty() && a.targets.size() == 1 && b.targets.size() == 1)
        return is_diagonal_1q(a.kind) && is_diagonal_1q(b.kind);
    return false;
}

}  // namespace

int ancillas_needed(const QubitGate &g) {
    return g.kind == K::kCnNot ? std::max(0, static_cast<int>(g.controls.size()) - 2) : 0;
}

std::vector<QubitGate> lower_gate(const QubitGate &g, int next_free_wire) {
    std::vector<QubitGate> out;
    switch (g.kind) {
        case K::kSwap: {
            const int a = g.targets[0], b = g.targets[1];
            out = {QubitGate::cnot(b, a), QubitGate::cnot(a, b), QubitGate::cnot(b, a)};
            break;
        }
        case K::kCnot:
        case K::kToffoli:
        case K::kCnNot:
            with_open_controls(out, g, [&] { emit_mcx(out, g.controls, g.targets[0], next_free_wire); });
            break;
        case K::kCswap:
            with_open_controls(out, g, [&] { emit_cswap(out, g.controls[0], g.targets[0], g.targets[1]); });
            break;
        case K::kCChi:
        case K::kCChiInv: {
            const int c = g.controls[0], a = g.targets[0], b = g.targets[1];
            with_open_controls(out, g, [&] {
                std::vector<QubitGate> body;
                emit_cswap(body, c, a, b);
                body.push_back(QubitGate::single(K::kX, b));
                emit_toffoli(body, c, b, a);
                body.push_back(QubitGate::single(K::kX, b));
                if (g.kind == K::kCChiInv) {
                    std::reverse(body.begin(), body.end());
                    for (auto &x : body) x = x.inverse();
                }
                out.insert(out.end(), body.begin(), body.end());
            });
            break;
        }
        default: out.push_back(g); break;
    }
    return out;
}

QubitCircuit cancel_adjacent(const QubitCircuit &c) {
    std::vector<QubitGate> out;
    for (const QubitGate &g : c.gates()) {
        bool consumed = false;
        for (std::size_t j = out.size(); j-- > 0;) {
            QubitGate &h = out[j];
            if (h == g.inverse()) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
                consumed = true;
                break;
            }
            if (is_rotation(g.kind) && h.kind == g.kind && h.targets == g.targets) {
                *h.angle += *g.angle;
                if (std::abs(*h.angle) < 1e-14) out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
                consumed = true;
                break;
            }
            if (!commute(h, g)) break;
        }
        if (!consumed) out.push_back(g);
    }
    QubitCircuit r(c.wires(), c.name());
    r.set_source(c.source());
    for (auto &g : out) r.add(std::move(g));
    return r;
}

QubitCircuit lower_to_cnot(const QubitCircuit &c, bool cancel) {
    int extra = 0;
    for (const auto &g : c.gates()) extra = std::max(extra, ancillas_needed(g));
    QubitCircuit r(c.wires() + extra, c.name());
    r.set_source(c.source());
    for (const auto &g : c.gates())
        for (auto &x : lower_gate(g, c.wires())) r.add(std::move(x));
    return cancel ? cancel_adjacent(r) : r;
}

double rotation_t_cost(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::kInvalidArgument, "rotation precision must lie in (0, 1)");
    return 1.15 * std::log2(1.0 / eps);
}

CliffordTReport lower_to_clifford_t(const QubitCircuit &c, double eps) {
    CliffordTReport rep{lower_to_cnot(c, false)};
    rep.t_per_rotation = rotation_t_cost(eps);
    for (const auto &g : c.gates()) rep.ancillas = std::max(rep.ancillas, ancillas_needed(g));
    for (const auto &g : rep.circuit.gates()) {
        if (g.kind == K::kT || g.kind == K::kTdg) ++rep.t_gates;
        if (is_rotation(g.kind)) ++rep.rotations;
        if (g.kind == K::kCnot) ++rep.cnots;
    }
    rep.t_count = static_cast<double>(rep.t_gates) + static_cast<double>(rep.rotations) * rep.t_per_rotation;
    return rep;
}

}  // namespace btg
