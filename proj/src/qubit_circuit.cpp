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

#include "qubit_circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace btg {

namespace {

struct KindInfo {
    QubitGateKind kind;
    std::string_view name;
    int controls;  // -1: one or more
    int targets;
};

constexpr std::array<KindInfo, 18> kKinds{{
    {QubitGateKind::kX, "X", 0, 1},
    {QubitGateKind::kY, "Y", 0, 1},
    {QubitGateKind::kZ, "Z", 0, 1},
    {QubitGateKind::kH, "H", 0, 1},
    {QubitGateKind::kS, "S", 0, 1},
    {QubitGateKind::kSdg, "SDG", 0, 1},
    {QubitGateKind::kT, "T", 0, 1},
    {QubitGateKind::kTdg, "TDG", 0, 1},
    {QubitGateKind::kRx, "RX", 0, 1},
    {QubitGateKind::kRy, "RY", 0, 1},
    {QubitGateKind::kRz, "RZ", 0, 1},
    {QubitGateKind::kCnot, "CNOT", 1, 1},
    {QubitGateKind::kSwap, "SWAP", 0, 2},
    {QubitGateKind::kToffoli, "TOFFOLI", 2, 1},
    {QubitGateKind::kCnNot, "CNNOT", -1, 1},
    {QubitGateKind::kCswap, "CSWAP", 1, 2},
    {QubitGateKind::kCChi, "CCHI", 1, 2},
    {QubitGateKind::kCChiInv, "CCHIDG", 1, 2},
}};

const KindInfo &info(QubitGateKind kind) {
    for (const auto &k : kKinds)
        if (k.kind == kind) return k;
    throw Error(ErrorCode::kInvalidArgument, "unknown qubit gate kind");
}

std::vector<bool> default_polarity(std::size_t n, std::vector<bool> given) {
    if (given.empty()) return std::vector<bool>(n, true);
    return given;
}

}  // namespace

std::string_view gate_name(QubitGateKind kind) { return info(kind).name; }

std::optional<QubitGateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &k : kKinds)
        if (k.name == name) return k.kind;
    return std::nullopt;
}

bool is_rotation(QubitGateKind kind) {
    return kind == QubitGateKind::kRx || kind == QubitGateKind::kRy || kind == QubitGateKind::kRz;
}

QubitGate QubitGate::single(QubitGateKind kind, int wire) {
    QubitGate g;
    g.kind = kind;
    g.targets = {wire};
    return g;
}

QubitGate QubitGate::rotation(QubitGateKind kind, int wire, double theta) {
    QubitGate g = single(kind, wire);
    g.angle = theta;
    return g;
}

QubitGate QubitGate::cnot(int control, int target, bool on_one) {
    return {QubitGateKind::kCnot, {control}, {on_one}, {target}, std::nullopt};
}

QubitGate QubitGate::toffoli(int c0, int c1, int target, bool pol0, bool pol1) {
    return {QubitGateKind::kToffoli, {c0, c1}, {pol0, pol1}, {target}, std::nullopt};
}

QubitGate QubitGate::mcx(std::vector<int> controls, int target, std::vector<bool> polarity) {
    const std::size_t n = controls.size();
    return {QubitGateKind::kCnNot, std::move(controls), default_polarity(n, std::move(polarity)), {target},
            std::nullopt};
}

QubitGate QubitGate::swap(int a, int b) { return {QubitGateKind::kSwap, {}, {}, {a, b}, std::nullopt}; }

QubitGate QubitGate::cswap(int control, int a, int b, bool on_one) {
    return {QubitGateKind::kCswap, {control}, {on_one}, {a, b}, std::nullopt};
}

QubitGate QubitGate::cchi(int control, int a, int b, bool on_one) {
    return {QubitGateKind::kCChi, {control}, {on_one}, {a, b}, std::nullopt};
}

QubitGate QubitGate::cchi_inv(int control, int a, int b, bool on_one) {
    return {QubitGateKind::kCChiInv, {control}, {on_one}, {a, b}, std::nullopt};
}

void QubitGate::validate(int wire_count) const {
    const KindInfo &k = info(kind);
    const std::string name(k.name);
    if (k.controls >= 0 && static_cast<int>(controls.size()) != k.controls)
        throw Error(ErrorCode::kInvalidArgument, name + ": wrong number of controls");
    if (k.controls < 0 && controls.empty()) throw Error(ErrorCode::kInvalidArgument, name + ": needs controls");
    if (static_cast<int>(targets.size()) != k.targets)
        throw Error(ErrorCode::kInvalidArgument, name + ": wrong number of targets");
    if (polarity.size() != controls.size())
        throw Error(ErrorCode::kInvalidArgument, name + ": polarity must match controls");
    if (is_rotation(kind) != angle.has_value())
        throw Error(ErrorCode::kInvalidArgument, name + ": angle present iff the gate is a rotation");
    if (angle && !std::isfinite(*angle)) throw Error(ErrorCode::kInvalidArgument, name + ": non-finite angle");
    std::vector<int> w = wires();
    for (int x : w)
        if (x < 0 || x >= wire_count)
            throw Error(ErrorCode::kInvalidArgument, name + ": wire " + std::to_string(x) + " out of range");
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw Error(ErrorCode::kInvalidArgument, name + ": wires must be distinct");
}

std::vector<int> QubitGate::wires() const {
    std::vector<int> w = controls;
    w.insert(w.end(), targets.begin(), targets.end());
    return w;
}

int QubitGate::max_wire() const {
    const auto w = wires();
    return w.empty() ? -1 : *std::max_element(w.begin(), w.end());
}

QubitGate QubitGate::inverse() const {
    QubitGate g = *this;
    switch (kind) {
        case QubitGateKind::kS: g.kind = QubitGateKind::kSdg; break;
        case QubitGateKind::kSdg: g.kind = QubitGateKind::kS; break;
        case QubitGateKind::kT: g.kind = QubitGateKind::kTdg; break;
        case QubitGateKind::kTdg: g.kind = QubitGateKind::kT; break;
        case QubitGateKind::kCChi: g.kind = QubitGateKind::kCChiInv; break;
        case QubitGateKind::kCChiInv: g.kind = QubitGateKind::kCChi; break;
        case QubitGateKind::kRx:
        case QubitGateKind::kRy:
        case QubitGateKind::kRz: g.angle = -*angle; break;
        default: break;
    }
    return g;
}

CMatrix QubitGate::target_matrix() const {
    using std::numbers::pi;
    const cplx i(0, 1);
    CMatrix m = CMatrix::Zero(2, 2);
    const double t = angle.value_or(0.0);
    switch (kind) {
        case QubitGateKind::kX:
        case QubitGateKind::kCnot:
        case QubitGateKind::kToffoli:
        case QubitGateKind::kCnNot: m << 0, 1, 1, 0; return m;
        case QubitGateKind::kY: m << 0, -i, i, 0; return m;
        case QubitGateKind::kZ: m << 1, 0, 0, -1; return m;
        case QubitGateKind::kH: m << 1, 1, 1, -1; return m / std::sqrt(2.0);
        case QubitGateKind::kS: m << 1, 0, 0, i; return m;
        case QubitGateKind::kSdg: m << 1, 0, 0, -i; return m;
        case QubitGateKind::kT: m << 1, 0, 0, std::polar(1.0, pi / 4); return m;
        case QubitGateKind::kTdg: m << 1, 0, 0, std::polar(1.0, -pi / 4); return m;
        case QubitGateKind::kRx: m << std::cos(t / 2), -i * std::sin(t / 2), -i * std::sin(t / 2), std::cos(t / 2); return m;
        case QubitGateKind::kRy: m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2); return m;
        case QubitGateKind::kRz: m << std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2); return m;
        case QubitGateKind::kSwap:
        case QubitGateKind::kCswap: {
            CMatrix s = CMatrix::Zero(4, 4);
            s(0, 0) = s(1, 2) = s(2, 1) = s(3, 3) = 1;
            return s;
        }
        case QubitGateKind::kCChi:
        case QubitGateKind::kCChiInv: {
            CMatrix s = CMatrix::Zero(4, 4);
            s(1, 0) = s(2, 1) = s(0, 2) = s(3, 3) = 1;
            if (kind == QubitGateKind::kCChiInv) s.transposeInPlace();
            return s;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown qubit gate kind");
}

QubitCircuit::QubitCircuit(int wires, std::string name) : wires_(wires), name_(std::move(name)) {
    if (wires < 0) throw Error(ErrorCode::kInvalidArgument, "negative wire count");
}

QubitCircuit &QubitCircuit::add(QubitGate gate) {
    gate.validate(wires_);
    gates_.push_back(std::move(gate));
    return *this;
}

QubitCircuit &QubitCircuit::append(const QubitCircuit &other) {
    if (other.wires_ > wires_) throw Error(ErrorCode::kInvalidArgument, "appended circuit is wider");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

QubitCircuit QubitCircuit::inverse() const {
    QubitCircuit r(wires_, name_.empty() ? name_ : name_ + "_inverse");
    r.source_ = source_;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) r.gates_.push_back(it->inverse());
    return r;
}

void QubitCircuit::widen(int wires) {
    if (wires < wires_) throw Error(ErrorCode::kInvalidArgument, "cannot shrink a circuit");
    wires_ = wires;
}

std::size_t QubitCircuit::count(QubitGateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const QubitGate &g) { return g.kind == kind; }));
}

void apply_gate(const QubitGate &gate, std::span<cplx> amps) {
    const std::size_t dim = amps.size();
    std::size_t control_mask = 0, control_value = 0, target_mask = 0;
    for (std::size_t k = 0; k < gate.controls.size(); ++k) {
        const std::size_t b = std::size_t{1} << gate.controls[k];
        control_mask |= b;
        if (gate.polarity[k]) control_value |= b;
    }
    const std::size_t nt = gate.targets.size();
    std::array<std::size_t, 4> offsets{};
    for (std::size_t s = 0; s < (std::size_t{1} << nt); ++s) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < nt; ++k)
            if ((s >> k) & 1) off |= std::size_t{1} << gate.targets[k];
        offsets[s] = off;
    }
    for (int t : gate.targets) target_mask |= std::size_t{1} << t;

    const CMatrix m = gate.target_matrix();
    const std::size_t block = std::size_t{1} << nt;
    std::array<cplx, 4> in{}, out{};
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;
        if ((base & control_mask) != control_value) continue;
        for (std::size_t s = 0; s < block; ++s) in[s] = amps[base | offsets[s]];
        for (std::size_t r = 0; r < block; ++r) {
            cplx acc = 0;
            for (std::size_t s = 0; s < block; ++s) acc += m(r, s) * in[s];
            out[r] = acc;
        }
        for (std::size_t s = 0; s < block; ++s) amps[base | offsets[s]] = out[s];
    }
}

namespace {

std::size_t checked_dimension(const QubitCircuit &c) {
    if (c.wires() > kMaxDenseQubits)
        throw Error(ErrorCode::kDimension, "dense simulation limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    return std::size_t{1} << c.wires();
}

void run(const QubitCircuit &c, std::span<cplx> amps) {
    for (const QubitGate &g : c.gates()) apply_gate(g, amps);
}

}  // namespace

CVector apply(const QubitCircuit &c, const CVector &state) {
    const std::size_t dim = checked_dimension(c);
    if (static_cast<std::size_t>(state.size()) != dim)
        throw Error(ErrorCode::kDimension, "state length does not match 2^wires");
    if (std::abs(state.norm() - 1.0) > 1e-10) throw Error(ErrorCode::kInvalidArgument, "state is not normalized");
    CVector out = state;
    run(c, std::span<cplx>(out.data(), dim));
    return out;
}

CMatrix unitary_of(const QubitCircuit &c) {
    const std::size_t dim = checked_dimension(c);
    CMatrix u = CMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (Eigen::Index j = 0; j < u.cols(); ++j) run(c, std::span<cplx>(u.col(j).data(), dim));
    return u;
}

CMatrix columns_of(const QubitCircuit &c, std::span<const int> basis) {
    const std::size_t dim = checked_dimension(c);
    CMatrix u = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j] < 0 || static_cast<std::size_t>(basis[j]) >= dim)
            throw Error(ErrorCode::kDimension, "basis index out of range");
        u(basis[j], static_cast<Eigen::Index>(j)) = 1.0;
        run(c, std::span<cplx>(u.col(static_cast<Eigen::Index>(j)).data(), dim));
    }
    return u;
}

}  // namespace btg
