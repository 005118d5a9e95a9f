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

#include <algorithm>
#include <map>
#include <set>

#include "group.hpp"

namespace btg {
namespace {

TEST(GroupIndex, RejectsInvalidStates) {
    EXPECT_THROW(GroupIndex(24), Error);
    EXPECT_THROW(GroupIndex(-1), Error);
    EXPECT_NO_THROW(GroupIndex(23));
}

TEST(GroupIndex, BitsRoundTrip) {
    for (GroupIndex g : all_elements()) EXPECT_EQ(encode(decode(g.value())), g.value());
    const GroupBits b = GroupIndex(10).bits();
    EXPECT_EQ(b.n, 1);
    EXPECT_EQ(b.p, 1);
    EXPECT_EQ(b.m + b.o + b.q, 0);
}

TEST(Group, FundamentalMatricesAreUnitaryAndDistinct) {
    std::set<std::vector<int>> seen;
    for (GroupIndex g : all_elements()) {
        CMatrix m(2, 2);
        const ExactMat2 &e = fundamental_matrix(g);
        for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = e[static_cast<std::size_t>(k)].value();
        EXPECT_LT(unitarity_error(m), 1e-15);
        EXPECT_NEAR(std::abs(m.determinant() - 1.0), 0.0, 1e-15);
        std::vector<int> key;
        for (const auto &h : e) key.insert(key.end(), {h.re2, h.im2});
        seen.insert(key);
    }
    EXPECT_EQ(seen.size(), 24u);
}

TEST(Group, QuaternionExamples) {
    EXPECT_EQ(multiply_oracle(GroupIndex(2), GroupIndex(4)).value(), 6);  // i j = k
    EXPECT_EQ(multiply_oracle(GroupIndex(2), GroupIndex(2)).value(), 1);  // i^2 = -1
    EXPECT_EQ(inverse_oracle(GroupIndex(8)).value(), 16);                 // l^-1 = l^2
    EXPECT_EQ(inverse_oracle(GroupIndex(0)).value(), 0);
    EXPECT_EQ(inverse_oracle(GroupIndex(1)).value(), 1);
}

TEST(Group, Axioms) {
    for (GroupIndex g : all_elements()) {
        EXPECT_EQ(multiply_oracle(g, GroupIndex(0)), g);
        EXPECT_EQ(multiply_oracle(GroupIndex(0), g), g);
        EXPECT_EQ(multiply_oracle(g, inverse_oracle(g)), GroupIndex(0));
        for (GroupIndex h : all_elements())
            for (GroupIndex k : all_elements())
                EXPECT_EQ(multiply_oracle(multiply_oracle(g, h), k), multiply_oracle(g, multiply_oracle(h, k)));
    }
}

TEST(Group, ClosedFormsMatchOracles) {
    for (GroupIndex g : all_elements()) {
        EXPECT_EQ(closed_form_inverse(g), inverse_oracle(g)) << g.value();
        for (GroupIndex h : all_elements()) EXPECT_EQ(closed_form_multiply(g, h), multiply_oracle(g, h));
    }
}

TEST(Group, PrintedRulesNeedTheCorrection) {
    int wrong = 0;
    for (GroupIndex g : all_elements())
        for (GroupIndex h : all_elements())
            if (encode(printed_multiply_rules(g, h)) != multiply_oracle(g, h).value()) ++wrong;
    EXPECT_GT(wrong, 0);
}

TEST(Group, FrozenCorrectionEqualsRefit) {
    EXPECT_EQ(frozen_multiply_correction(), fit_multiply_correction());
}

TEST(Group, ElementOrders) {
    std::map<int, int> histogram;
    for (GroupIndex g : all_elements()) ++histogram[element_order(g)];
    EXPECT_EQ(histogram, (std::map<int, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}));
    EXPECT_EQ(element_order(GroupIndex(1)), 2);
    EXPECT_EQ(element_order(GroupIndex(2)), 4);
    EXPECT_EQ(element_order(GroupIndex(8)), 3);
}

TEST(Group, LeftPermutationsAreBijectiveWithUniformCycles) {
    for (GroupIndex g : all_elements()) {
        const Permutation24 p = left_permutation(g);
        EXPECT_TRUE(p.is_bijective());
        for (const auto &cycle : p.cycles()) EXPECT_EQ(static_cast<int>(cycle.size()), element_order(g));
    }
}

TEST(Group, ReTraceValuesAndClassFunction) {
    EXPECT_EQ(re_trace(GroupIndex(0)), 2);
    EXPECT_EQ(re_trace(GroupIndex(1)), -2);
    EXPECT_EQ(re_trace(GroupIndex(5)), 0);
    int sum = 0;
    for (GroupIndex g : all_elements()) {
        sum += re_trace(g);
        EXPECT_EQ(re_trace(g), re_trace(inverse_oracle(g)));
        for (GroupIndex h : all_elements())
            EXPECT_EQ(re_trace(g), re_trace(multiply_oracle(multiply_oracle(h, g), inverse_oracle(h))));
    }
    EXPECT_EQ(sum, 0);
}

TEST(Group, IrrepsAreHomomorphisms) {
    for (int r = 0; r < kIrrepCount; ++r) {
        const Irrep rho = irrep_from_index(r);
        for (GroupIndex g : all_elements()) {
            EXPECT_LT(unitarity_error(irrep(rho, g)), 1e-12);
            for (GroupIndex h : all_elements()) {
                const CMatrix lhs = irrep(rho, multiply_oracle(g, h));
                const CMatrix rhs = irrep(rho, g) * irrep(rho, h);
                EXPECT_LT(max_abs(lhs - rhs), 1e-12) << irrep_name(rho) << ' ' << g.value() << ' ' << h.value();
            }
        }
    }
}

TEST(Group, DimensionsSquareSumIsOrder) {
    int s = 0;
    for (int r = 0; r < kIrrepCount; ++r) s += irrep_dimension(irrep_from_index(r)) * irrep_dimension(irrep_from_index(r));
    EXPECT_EQ(s, 24);
}

TEST(Group, SelfCheckPasses) {
    const GroupCheckReport r = group_self_check();
    EXPECT_EQ(r.inverse_matches, 24);
    EXPECT_EQ(r.multiply_matches, 576);
    EXPECT_LT(r.orthogonality_error, 1e-12);
    EXPECT_TRUE(r.class_data_ok);
    EXPECT_TRUE(r.ok());
}

TEST(Group, PublishedCharacterTableMisprintsAreTheOrderSixEntries) {
    const auto mismatches = published_character_mismatches();
    EXPECT_FALSE(mismatches.empty());
    for (const auto &m : mismatches) {
        EXPECT_TRUE(m.class_index == 3 || m.class_index == 4);
        EXPECT_TRUE(m.irrep == Irrep::kRho2 || m.irrep == Irrep::kRho3 || m.irrep == Irrep::kRho6);
    }
}

TEST(Group, TablesCsv) {
    const std::string e = element_table_csv();
    EXPECT_EQ(std::count(e.begin(), e.end(), '\n'), 25);
    const std::string m = multiplication_table_csv();
    EXPECT_EQ(std::count(m.begin(), m.end(), '\n'), 25);
    EXPECT_NE(m.find("\n2,2,3,1,0,6,"), std::string::npos);
}

}  // namespace
}  // namespace btg
