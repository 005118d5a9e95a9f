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

// Gate IR and dense simulation for qudit circuits (one BT register per
// 24-level qudit). Two-level (Givens) rotations act on levels (a, b) with a
// playing the role of |0> and b of |1>: R_P^(a,b)(theta) = exp(-i theta P / 2)
// on span{|a>, |b>}. Multi-wire basis index = sum_w level_w * dim^w.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace btg {

enum class QuditGateKind { kX, kRx, kRy, kRz, kSnap, kDisplacement, kCSnap };

std::string_view gate_name(QuditGateKind kind);
std::optional<QuditGateKind> qudit_kind_from_name(std::string_view name);

struct QuditGate {
    QuditGateKind kind = QuditGateKind::kX;
    /// Acting wire; for cSNAP the controlled (target) wire.
    int wire = 0;
    /// cSNAP only.
    int control_wire = -1;
    int control_level = -1;
    /// Givens-type gates only; stored with a < b.
    int level_a = 0;
    int level_b = 1;
    double angle = 0.0;
    std::vector<double> phases;  // SNAP / cSNAP, one per level
    cplx alpha{0.0, 0.0};        // displacement

    /// Normalizes (b, a) with b > a to a < b, flipping the angle sign where needed.
    static QuditGate givens(QuditGateKind kind, int wire, int a, int b, double theta = 0.0);
    static QuditGate snap(int wire, std::vector<double> phases);
    static QuditGate displacement(int wire, cplx alpha);
    static QuditGate csnap(int control_wire, int control_level, int target_wire, std::vector<double> phases);

    bool is_givens() const noexcept;
    void validate(int wires, int dimension) const;
    QuditGate inverse() const;

    friend bool operator==(const QuditGate &, const QuditGate &) = default;
};

class QuditCircuit {
  public:
    QuditCircuit(int wires, int dimension, std::string name = {});

    int wires() const noexcept { return wires_; }
    int dimension() const noexcept { return dimension_; }
    const std::string &name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::vector<QuditGate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }

    QuditCircuit &add(QuditGate gate);
    QuditCircuit &append(const QuditCircuit &other);
    QuditCircuit inverse() const;
    std::size_t count(QuditGateKind kind) const;
    std::size_t givens_count() const;

  private:
    int wires_;
    int dimension_;
    std::string name_;
    std::vector<QuditGate> gates_;
};

inline constexpr std::size_t kMaxDenseQuditDimension = 4096;

/// exp(alpha a^dagger - alpha^* a) in a Fock space truncated to `dimension` levels.
CMatrix displacement_matrix(int dimension, cplx alpha);

/// Matrix of a single-wire gate on that wire (dimension x dimension). Not valid for cSNAP.
CMatrix single_qudit_matrix(const QuditGate &gate, int dimension);

void apply_gate(const QuditGate &gate, int wires, int dimension, std::span<cplx> amplitudes);
CVector apply(const QuditCircuit &c, const CVector &state);
CMatrix unitary_of(const QuditCircuit &c);

}  // namespace btg
