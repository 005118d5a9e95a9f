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

#pragma once

// Name-driven construction and verification of the four primitives on both
// architectures.

#include <cstddef>
#include <string>
#include <string_view>

#include "qubit_circuit.hpp"
#include "qudit_circuit.hpp"

namespace btg {

enum class Arch { kQubit, kQudit };
std::string_view arch_name(Arch a);
/// Throws Error(kInvalidArgument) for anything but "qubit" or "qudit".
Arch arch_from_name(std::string_view name);

/// Canonical primitive name: inversion, mult, trace or fourier ("multiplication" is accepted).
/// Throws Error(kInvalidArgument) otherwise.
std::string canonical_primitive(std::string_view name);

QubitCircuit build_qubit_primitive(std::string_view primitive, double theta = 0.7);
QuditCircuit build_qudit_primitive(std::string_view primitive, double theta = 0.7);

struct SynthesisOptions {
    double theta = 0.7;
    /// Qubit only: lower to CNOT and 1-qubit gates.
    bool lower = false;
    /// Qubit only: lower, then place and route on the nairobi graph.
    bool route = false;
};

struct SynthesisOutput {
    std::string circuit_text;
    std::string counts_csv;
    std::size_t gates = 0;
    std::size_t cnots = 0;
    std::size_t swaps = 0;
};

SynthesisOutput synthesize_primitive(std::string_view primitive, Arch arch, const SynthesisOptions &options = {});

struct VerificationResult {
    std::string primitive;
    Arch arch = Arch::kQubit;
    std::size_t checked = 0;
    std::size_t correct = 0;
    double max_error = 0.0;
    bool ok() const { return checked > 0 && checked == correct; }
    /// e.g. "24/24 states correct".
    std::string summary() const;
};

/// Builds the primitive and checks it against the group oracles.
VerificationResult verify_primitive(std::string_view primitive, Arch arch, double theta = 0.7);

/// Checks a circuit in text form against the named primitive; the
/// architecture follows the text header.
VerificationResult verify_circuit_text(std::string_view text, std::string_view primitive, double theta = 0.7);

}  // namespace btg
