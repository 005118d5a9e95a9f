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

#include "qudit_circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace btg {

namespace {

constexpr std::array<std::pair<QuditGateKind, std::string_view>, 7> kNames{{
    {QuditGateKind::kX, "QX"},
    {QuditGateKind::kRx, "QRX"},
    {QuditGateKind::kRy, "QRY"},
    {QuditGateKind::kRz, "QRZ"},
    {QuditGateKind::kSnap, "SNAP"},
    {QuditGateKind::kDisplacement, "DISP"},
    {QuditGateKind::kCSnap, "CSNAP"},
}};

std::size_t total_dimension(int wires, int dimension) {
    std::size_t d = 1;
    for (int w = 0; w < wires; ++w) {
        d *= static_cast<std::size_t>(dimension);
        if (d > kMaxDenseQuditDimension) throw Error(ErrorCode::kDimension, "qudit state space too large");
    }
    return d;
}

}  // namespace

std::string_view gate_name(QuditGateKind kind) {
    for (const auto &[k, n] : kNames)
        if (k == kind) return n;
    return "?";
}

std::optional<QuditGateKind> qudit_kind_from_name(std::string_view name) {
    for (const auto &[k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

QuditGate QuditGate::givens(QuditGateKind kind, int wire, int a, int b, double theta) {
    QuditGate g;
    g.kind = kind;
    g.wire = wire;
    g.angle = theta;
    if (a > b) {
        std::swap(a, b);
        // Relabelling |0> <-> |1> conjugates by X: Z -> -Z, Y -> -Y, X -> X.
        if (kind == QuditGateKind::kRz || kind == QuditGateKind::kRy) g.angle = -theta;
    }
    g.level_a = a;
    g.level_b = b;
    return g;
}

QuditGate QuditGate::snap(int wire, std::vector<double> phases) {
    QuditGate g;
    g.kind = QuditGateKind::kSnap;
    g.wire = wire;
    g.phases = std::move(phases);
    return g;
}

QuditGate QuditGate::displacement(int wire, cplx alpha) {
    QuditGate g;
    g.kind = QuditGateKind::kDisplacement;
    g.wire = wire;
    g.alpha = alpha;
    return g;
}

QuditGate QuditGate::csnap(int control_wire, int control_level, int target_wire, std::vector<double> phases) {
    QuditGate g;
    g.kind = QuditGateKind::kCSnap;
    g.wire = target_wire;
    g.control_wire = control_wire;
    g.control_level = control_level;
    g.phases = std::move(phases);
    return g;
}

bool QuditGate::is_givens() const noexcept {
    return kind == QuditGateKind::kX || kind == QuditGateKind::kRx || kind == QuditGateKind::kRy ||
           kind == QuditGateKind::kRz;
}

void QuditGate::validate(int wires, int dimension) const {
    const std::string name(gate_name(kind));
    if (wire < 0 || wire >= wires) throw Error(ErrorCode::kInvalidArgument, name + ": wire out of range");
    if (is_givens()) {
        if (!(0 <= level_a && level_a < level_b && level_b < dimension))
            throw Error(ErrorCode::kInvalidArgument, name + ": levels must satisfy 0 <= a < b < dimension");
        if (!std::isfinite(angle)) throw Error(ErrorCode::kInvalidArgument, name + ": non-finite angle");
    }
    if (kind == QuditGateKind::kSnap || kind == QuditGateKind::kCSnap) {
        if (static_cast<int>(phases.size()) != dimension)
            throw Error(ErrorCode::kInvalidArgument, name + ": phase vector length must equal the dimension");
        for (double p : phases)
            if (!std::isfinite(p)) throw Error(ErrorCode::kInvalidArgument, name + ": non-finite phase");
    }
    if (kind == QuditGateKind::kCSnap) {
        if (control_wire < 0 || control_wire >= wires || control_wire == wire)
            throw Error(ErrorCode::kInvalidArgument, "CSNAP: bad control wire");
        if (control_level < 0 || control_level >= dimension)
            throw Error(ErrorCode::kInvalidArgument, "CSNAP: control level out of range");
    }
    if (kind == QuditGateKind::kDisplacement && !(std::isfinite(alpha.real()) && std::isfinite(alpha.imag())))
        throw Error(ErrorCode::kInvalidArgument, "DISP: non-finite amplitude");
}

QuditGate QuditGate::inverse() const {
    QuditGate g = *this;
    switch (kind) {
        case QuditGateKind::kX: break;
        case QuditGateKind::kRx:
        case QuditGateKind::kRy:
        case QuditGateKind::kRz: g.angle = -angle; break;
        case QuditGateKind::kSnap:
        case QuditGateKind::kCSnap:
            for (double &p : g.phases) p = -p;
            break;
        case QuditGateKind::kDisplacement: g.alpha = -alpha; break;
    }
    return g;
}

QuditCircuit::QuditCircuit(int wires, int dimension, std::string name)
    : wires_(wires), dimension_(dimension), name_(std::move(name)) {
    if (wires < 1 || dimension < 2) throw Error(ErrorCode::kInvalidArgument, "qudit circuit needs >= 1 wire of dimension >= 2");
}

QuditCircuit &QuditCircuit::add(QuditGate gate) {
    gate.validate(wires_, dimension_);
    gates_.push_back(std::move(gate));
    return *this;
}

QuditCircuit &QuditCircuit::append(const QuditCircuit &other) {
    if (other.dimension_ != dimension_) throw Error(ErrorCode::kInvalidArgument, "mixed qudit dimensions");
    if (other.wires_ > wires_) throw Error(ErrorCode::kInvalidArgument, "appended circuit is wider");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

QuditCircuit QuditCircuit::inverse() const {
    QuditCircuit r(wires_, dimension_, name_.empty() ? name_ : name_ + "_inverse");
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) r.gates_.push_back(it->inverse());
    return r;
}

std::size_t QuditCircuit::count(QuditGateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const QuditGate &g) { return g.kind == kind; }));
}

std::size_t QuditCircuit::givens_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const QuditGate &g) { return g.is_givens(); }));
}

CMatrix displacement_matrix(int dimension, cplx alpha) {
    CMatrix gen = CMatrix::Zero(dimension, dimension);
    for (int n = 1; n < dimension; ++n) {
        const double s = std::sqrt(static_cast<double>(n));
        gen(n, n - 1) = alpha * s;              // alpha a^dagger
        gen(n - 1, n) = -std::conj(alpha) * s;  // -alpha^* a
    }
    // gen is anti-Hermitian: exp(gen) = V exp(i lambda) V^dagger with i*lambda the spectrum.
    const CMatrix herm = cplx(0, -1) * gen;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
    const CVector phases = (cplx(0, 1) * es.eigenvalues().cast<cplx>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

CMatrix two_level(QuditGateKind kind, double t) {
    const cplx i(0, 1);
    CMatrix m(2, 2);
    switch (kind) {
        case QuditGateKind::kX: m << 0, 1, 1, 0; break;
        case QuditGateKind::kRx: m << std::cos(t / 2), -i * std::sin(t / 2), -i * std::sin(t / 2), std::cos(t / 2); break;
        case QuditGateKind::kRy: m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2); break;
        case QuditGateKind::kRz: m << std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2); break;
        default: throw Error(ErrorCode::kInternal, "not a two-level gate");
    }
    return m;
}

}  // namespace

CMatrix single_qudit_matrix(const QuditGate &gate, int dimension) {
    CMatrix m = CMatrix::Identity(dimension, dimension);
    switch (gate.kind) {
        case QuditGateKind::kX:
        case QuditGateKind::kRx:
        case QuditGateKind::kRy:
        case QuditGateKind::kRz: {
            const CMatrix b = two_level(gate.kind, gate.angle);
            const int a = gate.level_a, c = gate.level_b;
            m(a, a) = b(0, 0);
            m(a, c) = b(0, 1);
            m(c, a) = b(1, 0);
            m(c, c) = b(1, 1);
            return m;
        }
        case QuditGateKind::kSnap:
            for (int k = 0; k < dimension; ++k) m(k, k) = std::polar(1.0, gate.phases.at(k));
            return m;
        case QuditGateKind::kDisplacement: return displacement_matrix(dimension, gate.alpha);
        case QuditGateKind::kCSnap: break;
    }
    throw Error(ErrorCode::kInvalidArgument, "CSNAP is not a single-qudit gate");
}

void apply_gate(const QuditGate &gate, int wires, int dimension, std::span<cplx> amps) {
    const std::size_t total = total_dimension(wires, dimension);
    if (amps.size() != total) throw Error(ErrorCode::kDimension, "amplitude vector has the wrong length");
    const std::size_t d = static_cast<std::size_t>(dimension);
    std::size_t stride = 1;
    for (int w = 0; w < gate.wire; ++w) stride *= d;
    std::size_t control_stride = 1;
    if (gate.kind == QuditGateKind::kCSnap)
        for (int w = 0; w < gate.control_wire; ++w) control_stride *= d;

    auto level_of = [&](std::size_t index, std::size_t s) { return (index / s) % d; };

    if (gate.is_givens()) {
        const CMatrix b = two_level(gate.kind, gate.angle);
        const std::size_t la = static_cast<std::size_t>(gate.level_a), lb = static_cast<std::size_t>(gate.level_b);
        for (std::size_t idx = 0; idx < total; ++idx) {
            if (level_of(idx, stride) != la) continue;
            const std::size_t jdx = idx + (lb - la) * stride;
            const cplx x = amps[idx], y = amps[jdx];
            amps[idx] = b(0, 0) * x + b(0, 1) * y;
            amps[jdx] = b(1, 0) * x + b(1, 1) * y;
        }
        return;
    }
    if (gate.kind == QuditGateKind::kSnap || gate.kind == QuditGateKind::kCSnap) {
        std::vector<cplx> ph(d);
        for (std::size_t k = 0; k < d; ++k) ph[k] = std::polar(1.0, gate.phases[k]);
        const bool controlled = gate.kind == QuditGateKind::kCSnap;
        for (std::size_t idx = 0; idx < total; ++idx) {
            if (controlled && level_of(idx, control_stride) != static_cast<std::size_t>(gate.control_level)) continue;
            amps[idx] *= ph[level_of(idx, stride)];
        }
        return;
    }
    const CMatrix m = single_qudit_matrix(gate, dimension);
    CVector buf(dimension);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (level_of(idx, stride) != 0) continue;
        for (std::size_t k = 0; k < d; ++k) buf(static_cast<Eigen::Index>(k)) = amps[idx + k * stride];
        const CVector out = m * buf;
        for (std::size_t k = 0; k < d; ++k) amps[idx + k * stride] = out(static_cast<Eigen::Index>(k));
    }
}

CVector apply(const QuditCircuit &c, const CVector &state) {
    const std::size_t total = total_dimension(c.wires(), c.dimension());
    if (static_cast<std::size_t>(state.size()) != total) throw Error(ErrorCode::kDimension, "state length mismatch");
    if (std::abs(state.norm() - 1.0) > 1e-10) throw Error(ErrorCode::kInvalidArgument, "state is not normalized");
    CVector out = state;
    for (const QuditGate &g : c.gates()) apply_gate(g, c.wires(), c.dimension(), std::span<cplx>(out.data(), total));
    return out;
}

CMatrix unitary_of(const QuditCircuit &c) {
    const std::size_t total = total_dimension(c.wires(), c.dimension());
    const auto n = static_cast<Eigen::Index>(total);
    CMatrix u = CMatrix::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (const QuditGate &g : c.gates())
            apply_gate(g, c.wires(), c.dimension(), std::span<cplx>(u.col(j).data(), total));
    return u;
}

}  // namespace btg
