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

#include <gtest/gtest.h>

#include "lowering.hpp"
#include "noise.hpp"
#include "qubit_synth.hpp"

namespace btg {
namespace {

void add_pauli(QubitCircuit &c, int pauli, int wire) {
    static constexpr QubitGateKind kinds[] = {QubitGateKind::kX, QubitGateKind::kX, QubitGateKind::kY,
                                              QubitGateKind::kZ};
    if (pauli != 0) c.add(QubitGate::single(kinds[pauli], wire));
}

TEST(NoiseModel, DepolarizingSplitsEvenly) {
    const NoiseModel m = NoiseModel::depolarizing(0.03);
    EXPECT_NEAR(m.error_rate(), 0.03, 1e-15);
    for (int k = 1; k < 16; ++k) EXPECT_NEAR(m.pauli[static_cast<std::size_t>(k)], 0.002, 1e-15);
    EXPECT_NO_THROW(m.validate());
    EXPECT_THROW(NoiseModel::depolarizing(-0.1).validate(), Error);
    EXPECT_THROW(NoiseModel::depolarizing(1.5).validate(), Error);
}

TEST(Twirl, DressingsPreserveCnot) {
    QubitCircuit ref(2);
    ref.add(QubitGate::cnot(0, 1));
    const CMatrix want = unitary_of(ref);
    for (const CnotDressing &d : cnot_dressings()) {
        QubitCircuit c(2);
        add_pauli(c, d.pre_control, 0);
        add_pauli(c, d.pre_target, 1);
        c.add(QubitGate::cnot(0, 1));
        add_pauli(c, d.post_control, 0);
        add_pauli(c, d.post_target, 1);
        EXPECT_LT(phase_distance(unitary_of(c), want), 1e-12);
    }
}

TEST(Twirl, TwirledCircuitIsEquivalent) {
    const QubitCircuit c = prepare_experiment(Primitive::kInversion).routed.circuit;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const QubitCircuit t = pauli_twirl(c, seed);
        EXPECT_LT(phase_distance(unitary_of(t), unitary_of(c)), 1e-10);
    }
    EXPECT_EQ(sample_dressings(c, 7).size(), c.count(QubitGateKind::kCnot) + 3 * c.count(QubitGateKind::kSwap));
}

TEST(InputStates, Labels) {
    EXPECT_TRUE(InputState::from_label("GI").uniform);
    EXPECT_EQ(InputState::from_label("17").element, 17);
    EXPECT_EQ(InputState::group(5).label(), "5");
    EXPECT_EQ(InputState::uniform_superposition().label(), "GI");
    EXPECT_THROW(InputState::from_label("24"), Error);
    EXPECT_THROW(InputState::from_label("x"), Error);
    EXPECT_EQ(primitive_from_name("trace"), Primitive::kTrace);
    EXPECT_THROW(primitive_from_name("fourier"), Error);
}

TEST(Fidelity, NoiselessIsOne) {
    const NoisyExperiment e = prepare_experiment(Primitive::kTrace);
    FidelityOptions o;
    o.shots = 20;
    o.twirls = 3;
    for (int g : {0, 5, 23}) EXPECT_DOUBLE_EQ(process_fidelity(e, InputState::group(g), NoiseModel{}, o).fidelity, 1.0);
    EXPECT_NEAR(expected_fidelity(e, InputState::uniform_superposition(), NoiseModel{}, o), 1.0, 1e-10);
}

TEST(Fidelity, DecreasesWithNoiseAndIsReproducible) {
    const NoisyExperiment e = prepare_experiment(Primitive::kInversion);
    FidelityOptions o;
    o.shots = 50;
    o.twirls = 4;
    const InputState s = InputState::group(9);
    const double lo = expected_fidelity(e, s, NoiseModel::depolarizing(0.005), o);
    const double hi = expected_fidelity(e, s, NoiseModel::depolarizing(0.05), o);
    EXPECT_GT(lo, hi);
    EXPECT_LT(lo, 1.0);
    const FidelityResult a = process_fidelity(e, s, NoiseModel::depolarizing(0.02), o);
    const FidelityResult b = process_fidelity(e, s, NoiseModel::depolarizing(0.02), o);
    EXPECT_EQ(a.fidelity, b.fidelity);
    EXPECT_GE(a.fidelity, 0.0);
    EXPECT_LE(a.fidelity, 1.0);
}

TEST(Fidelity, CoherentErrorIsTwirledIntoStochasticError) {
    const NoisyExperiment e = prepare_experiment(Primitive::kTrace);
    FidelityOptions o;
    o.shots = 20;
    o.twirls = 4;
    const double f = expected_fidelity(e, InputState::group(3), NoiseModel::coherent(0.1), o);
    EXPECT_LT(f, 1.0);
    EXPECT_GT(f, 0.0);
}

TEST(Fidelity, CalibrationHitsTarget) {
    FidelityOptions o;
    o.shots = 10;
    o.twirls = 2;
    const double p = calibrate_depolarizing(0.8, o);
    EXPECT_GT(p, 0.0);
    EXPECT_LT(p, 15.0 / 16.0);
}

TEST(Experiments, RoutedCountsAreStable) {
    const NoisyExperiment t = prepare_experiment(Primitive::kTrace);
    const NoisyExperiment i = prepare_experiment(Primitive::kInversion);
    EXPECT_GT(t.cnots, 0u);
    EXPECT_GT(i.cnots, 0u);
    EXPECT_LT(routing_equivalence_error(lower_to_cnot(build_trace(0.7)), t.routed), 1e-10);
}

}  // namespace
}  // namespace btg
