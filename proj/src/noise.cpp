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

#include "noise.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "group.hpp"
#include "lowering.hpp"
#include "qubit_synth.hpp"

namespace btg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix64(splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b) ^ c);
}

constexpr std::uint64_t kDressingStream = 0x5157;
constexpr std::uint64_t kErrorStream = 0xE77;

// Pauli index 0..3 <-> (x, z) bits.
int pauli_x(int p) { return p == 1 || p == 2; }
int pauli_z(int p) { return p == 2 || p == 3; }
int pauli_from(int x, int z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); }

void apply_pauli(int pauli, int wire, std::vector<cplx> &amps) {
    if (pauli == 0) return;
    const std::size_t bit = std::size_t{1} << wire;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        cplx &a0 = amps[i], &a1 = amps[i | bit];
        switch (pauli) {
            case 1: std::swap(a0, a1); break;
            case 2: {
                const cplx t = a0;
                a0 = cplx(0, -1) * a1;
                a1 = cplx(0, 1) * t;
                break;
            }
            default: a1 = -a1; break;
        }
    }
}

struct CompiledOp {
    bool cnot = false;
    int control = 0, target = 0;
    std::size_t control_value = 0;
    int wire = 0;
    std::array<cplx, 4> m{};  // row-major 2 x 2
};

std::vector<CompiledOp> compile(const QubitCircuit &c) {
    std::vector<CompiledOp> ops;
    auto add_cnot = [&ops](int control, int target, bool on_one) {
        CompiledOp op;
        op.cnot = true;
        op.control = control;
        op.target = target;
        op.control_value = on_one ? std::size_t{1} << control : 0;
        ops.push_back(op);
    };
    for (const QubitGate &g : c.gates()) {
        if (g.kind == QubitGateKind::kCnot) {
            add_cnot(g.controls[0], g.targets[0], g.polarity[0]);
        } else if (g.kind == QubitGateKind::kSwap) {
            add_cnot(g.targets[0], g.targets[1], true);
            add_cnot(g.targets[1], g.targets[0], true);
            add_cnot(g.targets[0], g.targets[1], true);
        } else if (g.controls.empty() && g.targets.size() == 1) {
            CompiledOp op;
            op.wire = g.targets[0];
            const CMatrix m = g.target_matrix();
            op.m = {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
            ops.push_back(op);
        } else {
            throw Error(ErrorCode::kUnsupported, "noise simulation expects a circuit lowered to CNOT and 1-qubit gates");
        }
    }
    return ops;
}

void apply_single(const CompiledOp &op, std::vector<cplx> &amps) {
    const std::size_t bit = std::size_t{1} << op.wire;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) continue;
        const cplx a0 = amps[i], a1 = amps[i | bit];
        amps[i] = op.m[0] * a0 + op.m[1] * a1;
        amps[i | bit] = op.m[2] * a0 + op.m[3] * a1;
    }
}

void apply_cnot(const CompiledOp &op, std::vector<cplx> &amps) {
    const std::size_t cbit = std::size_t{1} << op.control, tbit = std::size_t{1} << op.target;
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (!(i & tbit) && (i & cbit) == op.control_value) std::swap(amps[i], amps[i | tbit]);
}

void apply_zx(double phi, int control, int target, std::vector<cplx> &amps) {
    const std::size_t cbit = std::size_t{1} << control, tbit = std::size_t{1} << target;
    const double c = std::cos(phi / 2), s = std::sin(phi / 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & tbit) continue;
        const double sign = (i & cbit) ? -1.0 : 1.0;
        const cplx a0 = amps[i], a1 = amps[i | tbit];
        amps[i] = c * a0 - cplx(0, sign * s) * a1;
        amps[i | tbit] = c * a1 - cplx(0, sign * s) * a0;
    }
}

std::size_t basis_index(int g, const std::vector<int> &layout) {
    std::size_t idx = 0;
    for (std::size_t w = 0; w < layout.size(); ++w)
        if ((g >> w) & 1) idx |= std::size_t{1} << layout[w];
    return idx;
}

struct TrajectoryTotals {
    long long successes = 0;
    double probability_sum = 0.0;
};

TrajectoryTotals run_trajectories(const NoisyExperiment &e, const InputState &s, const NoiseModel &noise,
                                  const FidelityOptions &options) {
    noise.validate();
    if (options.shots < 1 || options.twirls < 1) throw Error(ErrorCode::kInvalidArgument, "shots and twirls must be positive");
    if (!s.uniform && (s.element < 0 || s.element >= kGroupOrder))
        throw Error(ErrorCode::kInvalidArgument, "input element must lie in 0..23");

    QubitCircuit circuit = e.routed.circuit;
    if (s.uniform) circuit.append(e.routed.circuit.inverse());
    const std::vector<CompiledOp> ops = compile(circuit);
    const std::size_t dim = std::size_t{1} << circuit.wires();

    std::vector<cplx> initial(dim, cplx(0));
    std::vector<std::size_t> readout;
    if (s.uniform) {
        for (int g = 0; g < kGroupOrder; ++g) readout.push_back(basis_index(g, e.routed.initial));
        for (std::size_t idx : readout) initial[idx] = 1.0 / std::sqrt(static_cast<double>(kGroupOrder));
    } else {
        initial[basis_index(s.element, e.routed.initial)] = 1.0;
        const int out = e.primitive == Primitive::kInversion ? inverse_oracle(GroupIndex(s.element)).value() : s.element;
        readout.push_back(basis_index(out, e.routed.final));
    }

    std::array<double, 16> cumulative{};
    double acc = 0.0;
    for (int k = 1; k < 16; ++k) cumulative[static_cast<std::size_t>(k)] = acc += noise.pauli[static_cast<std::size_t>(k)];
    const double rate = acc;

    const std::uint64_t state_key = s.uniform ? 1000 : static_cast<std::uint64_t>(s.element);
    const auto prim_key = static_cast<std::uint64_t>(e.primitive);
    TrajectoryTotals totals;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<cplx> amps(dim);
    for (int twirl = 0; twirl < options.twirls; ++twirl) {
        std::vector<CnotDressing> dressing;
        if (options.twirl)
            dressing = sample_dressings(circuit, stream_key(options.seed ^ kDressingStream, prim_key, state_key, static_cast<std::uint64_t>(twirl)));
        std::mt19937_64 rng(stream_key(options.seed ^ kErrorStream, prim_key, state_key, static_cast<std::uint64_t>(twirl)));
        for (int shot = 0; shot < options.shots; ++shot) {
            amps = initial;
            std::size_t cnot_index = 0;
            for (const CompiledOp &op : ops) {
                if (!op.cnot) {
                    apply_single(op, amps);
                    continue;
                }
                const CnotDressing d = options.twirl ? dressing[cnot_index] : CnotDressing{};
                ++cnot_index;
                apply_pauli(d.pre_control, op.control, amps);
                apply_pauli(d.pre_target, op.target, amps);
                apply_cnot(op, amps);
                const double u_error = unit(rng), u_which = unit(rng);
                if (u_error < rate) {
                    int k = 1;
                    while (k < 15 && u_which * rate >= cumulative[static_cast<std::size_t>(k)]) ++k;
                    apply_pauli(k % 4, op.control, amps);
                    apply_pauli(k / 4, op.target, amps);
                }
                if (noise.coherent_zx != 0.0) apply_zx(noise.coherent_zx, op.control, op.target, amps);
                apply_pauli(d.post_control, op.control, amps);
                apply_pauli(d.post_target, op.target, amps);
            }
            double p0 = 0.0;
            if (s.uniform) {
                cplx overlap = 0.0;
                for (std::size_t idx : readout) overlap += amps[idx];
                p0 = std::norm(overlap) / kGroupOrder;
            } else {
                p0 = std::norm(amps[readout[0]]);
            }
            if (p0 > 1.0 - 1e-12) p0 = 1.0;
            totals.probability_sum += p0;
            if (unit(rng) < p0) ++totals.successes;
        }
    }
    return totals;
}

}  // namespace

NoiseModel NoiseModel::depolarizing(double p) {
    NoiseModel m;
    for (std::size_t k = 1; k < 16; ++k) m.pauli[k] = p / 15.0;
    m.validate();
    return m;
}

NoiseModel NoiseModel::coherent(double phi) {
    NoiseModel m;
    m.coherent_zx = phi;
    return m;
}

double NoiseModel::error_rate() const {
    double s = 0.0;
    for (std::size_t k = 1; k < 16; ++k) s += pauli[k];
    return s;
}

void NoiseModel::validate() const {
    for (std::size_t k = 1; k < 16; ++k)
        if (!(pauli[k] >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "Pauli error probabilities must be nonnegative");
    if (error_rate() > 1.0 + 1e-12) throw Error(ErrorCode::kInvalidArgument, "Pauli error probabilities sum above 1");
    if (!std::isfinite(coherent_zx)) throw Error(ErrorCode::kInvalidArgument, "coherent angle must be finite");
}

const std::array<CnotDressing, 16> &cnot_dressings() {
    static const std::array<CnotDressing, 16> table = [] {
        std::array<CnotDressing, 16> t{};
        for (int k = 0; k < 16; ++k) {
            const int pc = k % 4, pt = k / 4;
            const int xc = pauli_x(pc), zc = pauli_z(pc), xt = pauli_x(pt), zt = pauli_z(pt);
            t[static_cast<std::size_t>(k)] = {pc, pt, pauli_from(xc, zc ^ zt), pauli_from(xt ^ xc, zt)};
        }
        return t;
    }();
    return table;
}

std::vector<CnotDressing> sample_dressings(const QubitCircuit &c, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::uniform_int_distribution<int> pick(0, 15);
    std::vector<CnotDressing> out;
    for (const QubitGate &g : c.gates()) {
        const int n = g.kind == QubitGateKind::kCnot ? 1 : g.kind == QubitGateKind::kSwap ? 3 : 0;
        for (int k = 0; k < n; ++k) out.push_back(cnot_dressings()[static_cast<std::size_t>(pick(rng))]);
    }
    return out;
}

QubitCircuit pauli_twirl(const QubitCircuit &c, std::uint64_t seed) {
    static constexpr std::array<QubitGateKind, 4> kinds{QubitGateKind::kX, QubitGateKind::kX, QubitGateKind::kY,
                                                        QubitGateKind::kZ};
    const std::vector<CnotDressing> dressing = sample_dressings(c, seed);
    QubitCircuit out(c.wires(), c.name());
    std::size_t next = 0;
    auto pauli = [&out](int p, int wire) {
        if (p != 0) out.add(QubitGate::single(kinds[static_cast<std::size_t>(p)], wire));
    };
    auto dressed = [&](int control, int target, bool on_one) {
        const CnotDressing &d = dressing[next++];
        pauli(d.pre_control, control);
        pauli(d.pre_target, target);
        out.add(QubitGate::cnot(control, target, on_one));
        pauli(d.post_control, control);
        pauli(d.post_target, target);
    };
    for (const QubitGate &g : c.gates()) {
        if (g.kind == QubitGateKind::kCnot) {
            dressed(g.controls[0], g.targets[0], g.polarity[0]);
        } else if (g.kind == QubitGateKind::kSwap) {
            dressed(g.targets[0], g.targets[1], true);
            dressed(g.targets[1], g.targets[0], true);
            dressed(g.targets[0], g.targets[1], true);
        } else {
            out.add(g);
        }
    }
    return out;
}

std::string_view primitive_name(Primitive p) { return p == Primitive::kInversion ? "inversion" : "trace"; }

Primitive primitive_from_name(std::string_view name) {
    if (name == "inversion") return Primitive::kInversion;
    if (name == "trace") return Primitive::kTrace;
    throw Error(ErrorCode::kInvalidArgument, "unknown primitive '" + std::string(name) + "'");
}

InputState InputState::group(int g) {
    if (g < 0 || g >= kGroupOrder) throw Error(ErrorCode::kInvalidArgument, "group element must lie in 0..23");
    return {false, g};
}

InputState InputState::from_label(std::string_view label) {
    if (label == "GI") return uniform_superposition();
    int g = -1;
    try {
        std::size_t used = 0;
        g = std::stoi(std::string(label), &used);
        if (used != label.size()) g = -1;
    } catch (const std::exception &) {
        g = -1;
    }
    if (g < 0 || g >= kGroupOrder) throw Error(ErrorCode::kInvalidArgument, "unknown state label '" + std::string(label) + "'");
    return group(g);
}

std::string InputState::label() const { return uniform ? "GI" : std::to_string(element); }

NoisyExperiment prepare_experiment(Primitive p, double theta) {
    if (!std::isfinite(theta)) throw Error(ErrorCode::kInvalidArgument, "theta must be finite");
    NoisyExperiment e;
    e.primitive = p;
    e.theta = theta;
    const QubitCircuit logical = lower_to_cnot(p == Primitive::kInversion ? build_inversion() : build_trace(theta));
    e.routed = route_best(logical, CouplingGraph::nairobi());
    e.cnots = routed_cnot_count(e.routed);
    return e;
}

FidelityResult process_fidelity(const NoisyExperiment &e, const InputState &s, const NoiseModel &noise,
                                const FidelityOptions &options) {
    const TrajectoryTotals t = run_trajectories(e, s, noise, options);
    FidelityResult r;
    r.state = s.label();
    r.primitive = e.primitive;
    r.shots = options.shots;
    r.twirls = options.twirls;
    const double n = static_cast<double>(options.shots) * options.twirls;
    r.fidelity = static_cast<double>(t.successes) / n;
    r.error = std::sqrt(r.fidelity * (1.0 - r.fidelity) / n);
    return r;
}

double expected_fidelity(const NoisyExperiment &e, const InputState &s, const NoiseModel &noise,
                         const FidelityOptions &options) {
    const TrajectoryTotals t = run_trajectories(e, s, noise, options);
    return t.probability_sum / (static_cast<double>(options.shots) * options.twirls);
}

ExperimentTable experiment_table(const NoiseModel &noise, const FidelityOptions &options, double theta) {
    ExperimentTable t;
    t.noise = noise;
    const NoisyExperiment trace = prepare_experiment(Primitive::kTrace, theta);
    const NoisyExperiment inversion = prepare_experiment(Primitive::kInversion, theta);
    t.trace_cnots = trace.cnots;
    t.inversion_cnots = inversion.cnots;
    for (const NoisyExperiment *e : {&trace, &inversion}) {
        double sum = 0.0;
        for (int g = 0; g < kGroupOrder; ++g) {
            t.rows.push_back(process_fidelity(*e, InputState::group(g), noise, options));
            sum += t.rows.back().fidelity;
        }
        (e == &trace ? t.trace_mean : t.inversion_mean) = sum / kGroupOrder;
    }
    t.rows.push_back(process_fidelity(inversion, InputState::uniform_superposition(), noise, options));
    t.gi_inversion = t.rows.back().fidelity;
    return t;
}

std::string experiment_csv(const ExperimentTable &t) {
    std::ostringstream out;
    char buf[64];
    out << "primitive,state,shots,twirls,fidelity,error\n";
    for (const FidelityResult &r : t.rows) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f", r.fidelity, r.error);
        out << primitive_name(r.primitive) << ',' << r.state << ',' << r.shots << ',' << r.twirls << ',' << buf << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.6f", t.trace_mean);
    out << "trace,mean,,," << buf << ",\n";
    std::snprintf(buf, sizeof buf, "%.6f", t.inversion_mean);
    out << "inversion,mean,,," << buf << ",\n";
    return out.str();
}

double calibrate_depolarizing(double target, const FidelityOptions &options, double theta) {
    if (!(target > 0.0 && target < 1.0)) throw Error(ErrorCode::kInvalidArgument, "target fidelity must lie in (0, 1)");
    const NoisyExperiment trace = prepare_experiment(Primitive::kTrace, theta);
    auto mean = [&](double p) {
        double sum = 0.0;
        for (int g = 0; g < kGroupOrder; ++g) sum += expected_fidelity(trace, InputState::group(g), NoiseModel::depolarizing(p), options);
        return sum / kGroupOrder;
    };
    double lo = 0.0, hi = 15.0 / 16.0;
    if (mean(hi) > target) return hi;
    for (int it = 0; it < 30; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mean(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace btg
