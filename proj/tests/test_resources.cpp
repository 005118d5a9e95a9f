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

#include <cmath>

#include <json.hpp>

#include "error.hpp"
#include "resources.hpp"

namespace btg {
namespace {

TEST(Resources, PrimitiveTables) {
    const auto &t = primitive_t_costs();
    EXPECT_EQ(t[1].log_coefficient, 12.65);
    EXPECT_EQ(t[0].log_coefficient, 1150.0);
    EXPECT_EQ(t[2].constant, 28.0);
    EXPECT_EQ(t[3].constant, 154.0);
    EXPECT_EQ(t[3].clean_ancillas, 1);
    for (const TCost &c : t) {
        EXPECT_GE(c.constant, 0.0);
        EXPECT_GE(c.log_coefficient, 0.0);
    }
    for (const QuditCost &c : primitive_qudit_costs()) {
        EXPECT_GE(c.csnap, 0.0);
        EXPECT_GE(c.snap, 0.0);
        EXPECT_GE(c.displacement, 0.0);
    }
}

TEST(Resources, CountsPerLink) {
    const auto c = primitive_counts_per_link(3);
    EXPECT_EQ(c[0], 4.0);
    EXPECT_EQ(c[1], 3.0);
    EXPECT_EQ(c[2], 24.0);
    EXPECT_EQ(c[3], 56.0);
}

TEST(Resources, ConstantIdentityHoldsExactly) {
    for (int d = 1; d <= 4; ++d) {
        const CoefficientIdentity id = constant_identity(d);
        EXPECT_TRUE(id.holds()) << d;
        EXPECT_EQ(id.printed, 4312.0 * d - 3640.0);
    }
}

TEST(Resources, LogIdentityIsOffByPrintedRounding) {
    for (int d = 1; d <= 4; ++d) {
        const CoefficientIdentity id = log_identity(d);
        EXPECT_NEAR(id.tabulated - id.printed, -0.005, 1e-9) << d;
        EXPECT_FALSE(id.holds(1e-9));
        EXPECT_TRUE(id.holds(1e-2));
    }
}

TEST(Resources, FiducialTotals) {
    const ResourceSpec s;
    EXPECT_EQ(s.links(), 3000.0);
    EXPECT_NEAR(t_count_total(s) / 2.0e10, 1.0, 0.05);
    EXPECT_NEAR(t_count_printed(s) / t_count_total(s), 1.0, 1e-5);
    EXPECT_NEAR(t_count_alternative_reading(s) / 2.3e9, 1.0, 0.05);
    const QuditCost q = qudit_count_total(s);
    EXPECT_NEAR(q.csnap / 1.9e8, 1.0, 0.05);
    EXPECT_NEAR(q.snap / 4.9e9, 1.0, 0.05);
    EXPECT_NEAR(q.displacement / 4.9e9, 1.0, 0.05);
    const double f = fourier_fraction(s);
    EXPECT_GT(f, 0.0);
    EXPECT_LT(f, 1.0);
}

TEST(Resources, TotalScalesWithTimeSteps) {
    ResourceSpec a, b;
    b.nt = 2 * a.nt;
    EXPECT_NEAR(t_count_total(b), 2.0 * t_count_total(a), 1e-3);
}

TEST(Resources, InvalidSpecThrows) {
    ResourceSpec s;
    s.eps = 0.0;
    EXPECT_THROW(s.validate(), Error);
    s = {};
    s.L = 1;
    EXPECT_THROW(t_count_total(s), Error);
    EXPECT_THROW(resource_report_json(ResourceSpec{}, "analog"), Error);
}

TEST(Resources, JsonReport) {
    const auto j = nlohmann::json::parse(resource_report_json(ResourceSpec{}, "qubit"));
    EXPECT_TRUE(j.contains("spec"));
    EXPECT_TRUE(j.contains("totals"));
    EXPECT_TRUE(j.contains("alternative_readings"));
    const auto k = nlohmann::json::parse(resource_report_json(ResourceSpec{}, "qudit"));
    EXPECT_TRUE(k.contains("crosscheck"));
    EXPECT_EQ(resource_report_json(ResourceSpec{}, "qubit"), resource_report_json(ResourceSpec{}, "qubit"));
}

}  // namespace
}  // namespace btg
