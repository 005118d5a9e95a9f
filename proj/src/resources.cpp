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

#include "resources.hpp"

#include <cmath>

#include <json.hpp>

#include "error.hpp"

namespace btg {

namespace {

constexpr std::array<std::string_view, kPrimitiveGateCount> kNames{"fourier", "trace", "inversion", "multiplication"};

double scale(const ResourceSpec &s) { return s.links() * s.nt; }

QuditCost scaled(const QuditCost &c, double f) { return {c.csnap * f, c.snap * f, c.displacement * f}; }

}  // namespace

std::string_view primitive_gate_name(PrimitiveGate p) { return kNames[static_cast<std::size_t>(p)]; }

void ResourceSpec::validate() const {
    if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be at least 1");
    if (L < 2) throw Error(ErrorCode::kInvalidArgument, "L must be at least 2");
    if (nt < 1) throw Error(ErrorCode::kInvalidArgument, "N_t must be at least 1");
    if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::kInvalidArgument, "eps must lie in (0, 1)");
}

double ResourceSpec::links() const { return d * std::pow(static_cast<double>(L), d); }

double ResourceSpec::log2_inv_eps() const { return std::log2(1.0 / eps); }

const std::array<TCost, kPrimitiveGateCount> &primitive_t_costs() {
    static const std::array<TCost, kPrimitiveGateCount> table{{
        {0.0, 1150.0, 0},
        {0.0, 12.65, 0},
        {28.0, 0.0, 0},
        {154.0, 0.0, 1},
    }};
    return table;
}

const std::array<QuditCost, kPrimitiveGateCount> &primitive_qudit_costs() {
    static const std::array<QuditCost, kPrimitiveGateCount> table{{
        {0.0, 24.0, 25.0},
        {0.0, 1.0, 0.0},
        {0.0, 24.0, 25.0},
        {23.0, 575.0, 575.0},
    }};
    return table;
}

std::array<double, kPrimitiveGateCount> primitive_counts_per_link(int d) {
    if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be at least 1");
    const double k = d - 1;
    return {4.0, 1.5 * k, 2.0 + 11.0 * k, 4.0 + 26.0 * k};
}

TCost t_cost_per_link(int d) {
    const auto counts = primitive_counts_per_link(d);
    TCost total;
    for (std::size_t p = 0; p < counts.size(); ++p) {
        total.constant += counts[p] * primitive_t_costs()[p].constant;
        total.log_coefficient += counts[p] * primitive_t_costs()[p].log_coefficient;
        total.clean_ancillas = std::max(total.clean_ancillas, primitive_t_costs()[p].clean_ancillas);
    }
    return total;
}

double t_count_total(const ResourceSpec &s) {
    s.validate();
    const TCost c = t_cost_per_link(s.d);
    return (c.constant + c.log_coefficient * s.log2_inv_eps()) * scale(s);
}

double t_count_printed(const ResourceSpec &s) {
    s.validate();
    return (4312.0 * s.d - 3640.0 + (4581.03 + 18.975 * s.d) * s.log2_inv_eps()) * scale(s);
}

double t_count_alternative_reading(const ResourceSpec &s) {
    s.validate();
    return (4312.0 * s.d - 3640.0 + 4581.03 + 18.975 * s.d * s.log2_inv_eps()) * scale(s);
}

double fourier_fraction(const ResourceSpec &s) {
    const double total = t_count_total(s);
    const std::size_t f = static_cast<std::size_t>(PrimitiveGate::kFourier);
    const double fourier = primitive_counts_per_link(s.d)[f] *
                           (primitive_t_costs()[f].constant + primitive_t_costs()[f].log_coefficient * s.log2_inv_eps()) *
                           scale(s);
    return total > 0.0 ? fourier / total : 0.0;
}

bool CoefficientIdentity::holds(double tol) const {
    return std::abs(tabulated - printed) <= tol * std::max(1.0, std::abs(printed));
}

CoefficientIdentity constant_identity(int d) { return {d, t_cost_per_link(d).constant, 4312.0 * d - 3640.0}; }

CoefficientIdentity log_identity(int d) { return {d, t_cost_per_link(d).log_coefficient, 4581.03 + 18.975 * d}; }

QuditCost qudit_cost_per_link_printed(int d) {
    if (d < 1) throw Error(ErrorCode::kInvalidArgument, "d must be at least 1");
    return {598.0 * d - 506.0, 15215.5 * d - 12771.5, 15225.0 * d - 12775.0};
}

QuditCost qudit_cost_per_link_tabulated(int d) {
    const auto counts = primitive_counts_per_link(d);
    QuditCost total;
    for (std::size_t p = 0; p < counts.size(); ++p) {
        total.csnap += counts[p] * primitive_qudit_costs()[p].csnap;
        total.snap += counts[p] * primitive_qudit_costs()[p].snap;
        total.displacement += counts[p] * primitive_qudit_costs()[p].displacement;
    }
    return total;
}

QuditCost qudit_count_total(const ResourceSpec &s) {
    s.validate();
    return scaled(qudit_cost_per_link_printed(s.d), scale(s));
}

QuditCost qudit_count_crosscheck(const ResourceSpec &s) {
    s.validate();
    return scaled(qudit_cost_per_link_tabulated(s.d), scale(s));
}

std::string resource_report_json(const ResourceSpec &s, std::string_view arch) {
    s.validate();
    if (arch != "qubit" && arch != "qudit") throw Error(ErrorCode::kInvalidArgument, "arch must be qubit or qudit");
    using nlohmann::ordered_json;
    ordered_json j;
    j["spec"] = {{"d", s.d}, {"L", s.L}, {"nt", s.nt}, {"eps", s.eps}, {"links", s.links()}, {"arch", arch}};
    const auto counts = primitive_counts_per_link(s.d);
    ordered_json per = ordered_json::array();
    for (std::size_t p = 0; p < counts.size(); ++p) {
        ordered_json row{{"primitive", kNames[p]}, {"count_per_link", counts[p]}};
        if (arch == "qubit") {
            row["t_constant"] = primitive_t_costs()[p].constant;
            row["t_log_coefficient"] = primitive_t_costs()[p].log_coefficient;
            row["clean_ancillas"] = primitive_t_costs()[p].clean_ancillas;
        } else {
            row["csnap"] = primitive_qudit_costs()[p].csnap;
            row["snap"] = primitive_qudit_costs()[p].snap;
            row["displacement"] = primitive_qudit_costs()[p].displacement;
        }
        per.push_back(row);
    }
    j["per_primitive"] = per;
    if (arch == "qubit") {
        const TCost c = t_cost_per_link(s.d);
        j["totals"] = {{"t_count", t_count_total(s)},
                       {"t_count_printed_formula", t_count_printed(s)},
                       {"t_per_link_constant", c.constant},
                       {"t_per_link_log_coefficient", c.log_coefficient}};
        j["fourier_fraction"] = fourier_fraction(s);
        j["fourier_fraction_quoted"] = 0.44;
        j["alternative_readings"] = {{"log_multiplies_d_term_only", t_count_alternative_reading(s)}};
    } else {
        const QuditCost printed = qudit_count_total(s), tab = qudit_count_crosscheck(s);
        j["totals"] = {{"csnap", printed.csnap}, {"snap", printed.snap}, {"displacement", printed.displacement}};
        j["crosscheck"] = {{"csnap", tab.csnap}, {"snap", tab.snap}, {"displacement", tab.displacement}};
        const std::size_t f = static_cast<std::size_t>(PrimitiveGate::kFourier);
        const QuditCost total = tab;
        j["fourier_fraction"] = total.snap + total.displacement > 0.0
                                    ? counts[f] * (primitive_qudit_costs()[f].snap + primitive_qudit_costs()[f].displacement) *
                                          scale(s) / (total.snap + total.displacement)
                                    : 0.0;
        j["alternative_readings"] = ordered_json::object();
    }
    return j.dump(2) + "\n";
}

}  // namespace btg
