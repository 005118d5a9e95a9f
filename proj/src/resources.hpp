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

// Fault-tolerant T-gate and native qudit-gate resource estimates for a
// Trotterized simulation of the improved Hamiltonian on a d-dimensional
// lattice of extent L for N_t steps, with one register per link (d L^d links,
// boundary effects neglected).

#include <array>
#include <string>
#include <string_view>

namespace btg {

enum class PrimitiveGate : int { kFourier = 0, kTrace, kInversion, kMultiplication };
inline constexpr int kPrimitiveGateCount = 4;
std::string_view primitive_gate_name(PrimitiveGate p);

struct ResourceSpec {
    int d = 3;
    int L = 10;
    int nt = 50;
    double eps = 1e-8;

    /// Throws Error(kInvalidArgument) unless d >= 1, L >= 2, nt >= 1, 0 < eps < 1.
    void validate() const;
    double links() const;
    double log2_inv_eps() const;
};

/// T cost of one primitive: constant + log_coefficient * log2(1/eps).
struct TCost {
    double constant = 0.0;
    double log_coefficient = 0.0;
    int clean_ancillas = 0;
};

/// Native qudit cost of one primitive.
struct QuditCost {
    double csnap = 0.0;
    double snap = 0.0;
    double displacement = 0.0;
};

/// Published per-primitive costs, indexed by PrimitiveGate.
const std::array<TCost, kPrimitiveGateCount> &primitive_t_costs();
const std::array<QuditCost, kPrimitiveGateCount> &primitive_qudit_costs();

/// Primitive applications per link per Trotter step, indexed by PrimitiveGate.
std::array<double, kPrimitiveGateCount> primitive_counts_per_link(int d);

/// Sum over primitives of count x cost, per link per step.
TCost t_cost_per_link(int d);

/// N_T from the tabulated sum: per-link cost x links x N_t.
double t_count_total(const ResourceSpec &s);
/// The printed closed form [4312d - 3640 + (4581.03 + 18.975 d) log2(1/eps)] d L^d N_t.
double t_count_printed(const ResourceSpec &s);
/// The printed closed form read with the logarithm multiplying 18.975 d only.
double t_count_alternative_reading(const ResourceSpec &s);

/// Share of t_count_total carried by the Fourier transforms.
double fourier_fraction(const ResourceSpec &s);

/// One side-by-side comparison of a tabulated coefficient with its printed value.
struct CoefficientIdentity {
    int d = 0;
    double tabulated = 0.0;
    double printed = 0.0;
    bool holds(double tol = 1e-9) const;
};
/// 28 (2 + 11(d-1)) + 154 (4 + 26(d-1)) against 4312 d - 3640.
CoefficientIdentity constant_identity(int d);
/// 4 * 1150 + 12.65 (3/2)(d-1) against 4581.03 + 18.975 d.
CoefficientIdentity log_identity(int d);

/// Per link per step from the printed formulas (598d - 506, 15215.5d - 12771.5, 15225d - 12775).
QuditCost qudit_cost_per_link_printed(int d);
/// Per link per step from primitive costs x primitive counts.
QuditCost qudit_cost_per_link_tabulated(int d);

/// Printed per-link formulas x links x N_t.
QuditCost qudit_count_total(const ResourceSpec &s);
/// Tabulated per-link costs x links x N_t.
QuditCost qudit_count_crosscheck(const ResourceSpec &s);

/// JSON report {spec, per_primitive, totals, fourier_fraction, alternative_readings}.
std::string resource_report_json(const ResourceSpec &s, std::string_view arch);

}  // namespace btg
