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

// Pauli twirling and stochastic Pauli-noise trajectories for the routed
// inversion and trace circuits, with process fidelities estimated from the
// all-zero outcome after un-computation.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qubit_circuit.hpp"
#include "routing.hpp"

namespace btg {

/// Two-qubit Pauli P_c (x) P_t indexed c + 4 t with 0 = I, 1 = X, 2 = Y, 3 = Z
/// (c on the CNOT control, t on the target).
struct NoiseModel {
    std::array<double, 16> pauli{};  // pauli[0] is ignored
    /// Angle of exp(-i phi Z_c X_t / 2) applied after every CNOT.
    double coherent_zx = 0.0;

    static NoiseModel depolarizing(double p);
    static NoiseModel coherent(double phi);
    double error_rate() const;
    /// Throws Error(kInvalidArgument) for negative entries or total mass above 1.
    void validate() const;
};

/// Pre-Paulis on (control, target) and the compensating post-Paulis.
struct CnotDressing {
    int pre_control = 0, pre_target = 0;
    int post_control = 0, post_target = 0;
};

/// The 16 dressings, indexed by pre_control + 4 pre_target.
const std::array<CnotDressing, 16> &cnot_dressings();

/// One dressing per CNOT of `c`, drawn uniformly from a stream keyed by seed.
std::vector<CnotDressing> sample_dressings(const QubitCircuit &c, std::uint64_t seed);

/// Every CNOT wrapped in its sampled dressing.
QubitCircuit pauli_twirl(const QubitCircuit &c, std::uint64_t seed);

enum class Primitive { kInversion, kTrace };
std::string_view primitive_name(Primitive p);
/// Throws Error(kInvalidArgument) for anything but "inversion" or "trace".
Primitive primitive_from_name(std::string_view name);

/// Logical input: a group element g, or the uniform superposition |GI> over 0..23.
struct InputState {
    bool uniform = false;
    int element = 0;

    static InputState group(int g);
    static InputState uniform_superposition() { return {true, 0}; }
    /// Throws Error(kInvalidArgument) for labels other than "GI" or 0..23.
    static InputState from_label(std::string_view label);
    std::string label() const;
};

/// Lowered, routed primitive on the nairobi graph with SWAPs lowered to CNOTs.
struct NoisyExperiment {
    Primitive primitive = Primitive::kTrace;
    double theta = 0.7;
    RoutedCircuit routed;
    std::size_t cnots = 0;
};

NoisyExperiment prepare_experiment(Primitive p, double theta = 0.7);

struct FidelityResult {
    std::string state;
    Primitive primitive = Primitive::kTrace;
    int shots = 0;
    int twirls = 0;
    double fidelity = 0.0;
    double error = 0.0;  // sqrt(F (1 - F) / (shots twirls))
};

struct FidelityOptions {
    int shots = 500;
    int twirls = 20;
    std::uint64_t seed = 1;
    /// Twirl CNOTs; coherent errors then become Pauli errors on average.
    bool twirl = true;
};

/// Fraction of all-zero outcomes. |g> is prepared and un-computed with X
/// gates; |GI> is prepared exactly and un-computed with the noisy inverse
/// circuit followed by exact un-preparation.
FidelityResult process_fidelity(const NoisyExperiment &e, const InputState &s, const NoiseModel &noise,
                                const FidelityOptions &options);

/// Mean all-zero probability over the same trajectories, without readout sampling.
double expected_fidelity(const NoisyExperiment &e, const InputState &s, const NoiseModel &noise,
                         const FidelityOptions &options);

struct ExperimentTable {
    NoiseModel noise;
    std::vector<FidelityResult> rows;  // 24 trace, 24 inversion, then |GI> inversion
    double trace_mean = 0.0;
    double inversion_mean = 0.0;
    double gi_inversion = 0.0;
    std::size_t trace_cnots = 0;
    std::size_t inversion_cnots = 0;
};

ExperimentTable experiment_table(const NoiseModel &noise, const FidelityOptions &options, double theta = 0.7);

/// Columns primitive,state,shots,twirls,fidelity,error, followed by mean rows.
std::string experiment_csv(const ExperimentTable &t);

/// Depolarizing rate at which the mean expected trace fidelity over the 24
/// |g> inputs equals `target`, by bisection.
double calibrate_depolarizing(double target, const FidelityOptions &options, double theta = 0.7);

}  // namespace btg
