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

// Gate IR and dense simulation for qubit circuits.
//
// Basis convention: wire 0 is the least significant bit of the basis index,
// so a BT register |q p o n m> on wires (m, n, o, p, q) = (0..4) has basis
// index m + 2n + 4o + 8p + 16q, i.e. the group index.
//
// Rotations follow R_P(theta) = exp(-i theta P / 2).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "linalg.hpp"

namespace btg {

enum class QubitGateKind {
    kX,
    kY,
    kZ,
    kH,
    kS,
    kSdg,
    kT,
    kTdg,
    kRx,
    kRy,
    kRz,
    kCnot,
    kSwap,
    kToffoli,
    kCnNot,
    kCswap,
    kCChi,
    kCChiInv,
};

std::string_view gate_name(QubitGateKind kind);
std::optional<QubitGateKind> gate_kind_from_name(std::string_view name);
bool is_rotation(QubitGateKind kind);

/// One gate. Controls carry a polarity: true fires on |1> (filled circle),
/// false on |0> (open circle).
///
/// CChi is the controlled cyclic permutation of the two target wires
/// (a, b) read as the integer a + 2b: 0 -> 1 -> 2 -> 0, 3 fixed. On a BT
/// register's (p, q) wires it adds 1 to the exponent of l modulo 3.
struct QubitGate {
    QubitGateKind kind = QubitGateKind::kX;
    std::vector<int> controls;
    std::vector<bool> polarity;
    std::vector<int> targets;
    std::optional<double> angle;

    static QubitGate single(QubitGateKind kind, int wire);
    static QubitGate rotation(QubitGateKind kind, int wire, double theta);
    static QubitGate cnot(int control, int target, bool on_one = true);
    static QubitGate toffoli(int c0, int c1, int target, bool pol0 = true, bool pol1 = true);
    static QubitGate mcx(std::vector<int> controls, int target, std::vector<bool> polarity = {});
    static QubitGate swap(int a, int b);
    static QubitGate cswap(int control, int a, int b, bool on_one = true);
    static QubitGate cchi(int control, int a, int b, bool on_one = true);
    static QubitGate cchi_inv(int control, int a, int b, bool on_one = true);

    /// Throws Error(kInvalidArgument) when arity, wire distinctness or angle presence is wrong.
    void validate(int wire_count) const;
    std::vector<int> wires() const;
    int max_wire() const;
    QubitGate inverse() const;
    /// Unitary on the target wires only (2^k x 2^k, target 0 least significant).
    CMatrix target_matrix() const;

    friend bool operator==(const QubitGate &, const QubitGate &) = default;
};

class QubitCircuit {
  public:
    explicit QubitCircuit(int wires = 0, std::string name = {});

    int wires() const noexcept { return wires_; }
    const std::string &name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::string &source() const noexcept { return source_; }
    void set_source(std::string source) { source_ = std::move(source); }
    const std::vector<QubitGate> &gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    QubitCircuit &add(QubitGate gate);
    /// Appends `other` after this circuit (other acts later).
    QubitCircuit &append(const QubitCircuit &other);
    QubitCircuit inverse() const;
    /// Grows the wire count; existing gates keep their indices.
    void widen(int wires);

    std::size_t count(QubitGateKind kind) const;

  private:
    int wires_;
    std::string name_;
    std::string source_;
    std::vector<QubitGate> gates_;
};

inline constexpr int kMaxDenseQubits = 12;

/// Applies one gate in place to a 2^wires amplitude vector.
void apply_gate(const QubitGate &gate, std::span<cplx> amplitudes);

/// Gate-by-gate application; requires a normalized state of length 2^wires.
CVector apply(const QubitCircuit &c, const CVector &state);

/// Exact product of the gate matrices in application order.
CMatrix unitary_of(const QubitCircuit &c);

/// Columns `basis` of unitary_of(c), without building the full matrix.
CMatrix columns_of(const QubitCircuit &c, std::span<const int> basis);

}  // namespace btg
