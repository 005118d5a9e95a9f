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

#include "primitives.hpp"

#include "circuit_text.hpp"
#include "error.hpp"
#include "lowering.hpp"
#include "qubit_synth.hpp"
#include "qudit_synth.hpp"
#include "routing.hpp"

namespace btg {

namespace {

QubitCircuit build_qubit(const std::string &p, double theta) {
    if (p == "inversion") return build_inversion();
    if (p == "mult") return build_multiplication();
    if (p == "trace") return build_trace(theta);
    return build_fourier_circuit();
}

QuditCircuit build_qudit(const std::string &p, double theta) {
    if (p == "inversion") return build_inversion_qudit();
    if (p == "mult") return build_multiplication_qudit();
    if (p == "trace") return build_trace_qudit(theta);
    return build_fourier_qudit();
}

template <typename Check>
VerificationResult from_check(const std::string &p, Arch a, const Check &c) {
    VerificationResult r;
    r.primitive = p;
    r.arch = a;
    r.checked = c.checked;
    r.correct = c.correct;
    r.max_error = c.max_error;
    return r;
}

VerificationResult check_qubit(const std::string &p, const QubitCircuit &c, double theta) {
    if (p == "inversion") return from_check(p, Arch::kQubit, check_inversion(c));
    if (p == "mult") return from_check(p, Arch::kQubit, check_multiplication(c));
    if (p == "trace") return from_check(p, Arch::kQubit, check_trace(c, theta));
    return from_check(p, Arch::kQubit, check_fourier(c));
}

VerificationResult check_qudit(const std::string &p, const QuditCircuit &c, double theta) {
    if (p == "inversion") return from_check(p, Arch::kQudit, check_inversion_qudit(c));
    if (p == "mult") return from_check(p, Arch::kQudit, check_multiplication_qudit(c));
    if (p == "trace") return from_check(p, Arch::kQudit, check_trace_qudit(c, theta));
    return from_check(p, Arch::kQudit, check_fourier_qudit(c));
}

}  // namespace

QubitCircuit build_qubit_primitive(std::string_view primitive, double theta) {
    return build_qubit(canonical_primitive(primitive), theta);
}

QuditCircuit build_qudit_primitive(std::string_view primitive, double theta) {
    return build_qudit(canonical_primitive(primitive), theta);
}

std::string_view arch_name(Arch a) { return a == Arch::kQudit ? "qudit" : "qubit"; }

Arch arch_from_name(std::string_view name) {
    if (name == "qubit") return Arch::kQubit;
    if (name == "qudit") return Arch::kQudit;
    throw Error(ErrorCode::kInvalidArgument, "architecture must be qubit or qudit");
}

std::string canonical_primitive(std::string_view name) {
    if (name == "inversion" || name == "trace" || name == "fourier" || name == "mult") return std::string(name);
    if (name == "multiplication") return "mult";
    throw Error(ErrorCode::kInvalidArgument, "unknown primitive '" + std::string(name) + "'");
}

SynthesisOutput synthesize_primitive(std::string_view primitive, Arch arch, const SynthesisOptions &options) {
    const std::string p = canonical_primitive(primitive);
    SynthesisOutput out;
    if (arch == Arch::kQudit) {
        if (options.lower || options.route) throw Error(ErrorCode::kInvalidArgument, "lowering and routing apply to qubit circuits only");
        const QuditCircuit c = build_qudit(p, options.theta);
        out.circuit_text = to_text(c);
        out.counts_csv = gate_count_csv(c);
        out.gates = c.size();
        return out;
    }
    QubitCircuit c = build_qubit(p, options.theta);
    if (options.lower || options.route) c = lower_to_cnot(c);
    if (options.route) {
        const RoutedCircuit r = route_best(c, CouplingGraph::nairobi());
        out.swaps = r.swaps;
        out.cnots = routed_cnot_count(r);
        c = r.circuit;
    } else {
        out.cnots = c.count(QubitGateKind::kCnot);
    }
    out.circuit_text = to_text(c);
    out.counts_csv = gate_count_csv(c);
    out.gates = c.size();
    return out;
}

std::string VerificationResult::summary() const {
    const std::string unit = primitive == "mult" ? " pairs" : " states";
    return std::to_string(correct) + "/" + std::to_string(checked) + unit + " correct";
}

VerificationResult verify_primitive(std::string_view primitive, Arch arch, double theta) {
    const std::string p = canonical_primitive(primitive);
    return arch == Arch::kQubit ? check_qubit(p, build_qubit(p, theta), theta) : check_qudit(p, build_qudit(p, theta), theta);
}

VerificationResult verify_circuit_text(std::string_view text, std::string_view primitive, double theta) {
    const std::string p = canonical_primitive(primitive);
    if (text_is_qudit(text)) return check_qudit(p, qudit_circuit_from_text(text), theta);
    return check_qubit(p, qubit_circuit_from_text(text), theta);
}

}  // namespace btg
