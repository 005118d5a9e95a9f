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

#include <cstring>
#include <string>
#include <vector>

#include "btgates/btgates.h"

namespace {

std::string take(char *s) {
    std::string out = s ? s : "";
    btg_string_free(s);
    return out;
}

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STRNE(btg_version(), "");
    EXPECT_STREQ(btg_status_name(BTG_OK), "ok");
    EXPECT_STRNE(btg_status_name(BTG_ERR_PARSE), btg_status_name(BTG_ERR_IO));
}

TEST(CApi, GroupCalls) {
    int out = -1;
    ASSERT_EQ(btg_group_multiply(2, 4, &out), BTG_OK);
    EXPECT_EQ(out, 6);
    ASSERT_EQ(btg_group_inverse(8, &out), BTG_OK);
    EXPECT_EQ(out, 16);
    ASSERT_EQ(btg_group_re_trace(0, &out), BTG_OK);
    EXPECT_EQ(out, 2);
    ASSERT_EQ(btg_group_element_order(8, &out), BTG_OK);
    EXPECT_EQ(out, 3);
    EXPECT_EQ(btg_group_multiply(24, 0, &out), BTG_ERR_ENCODING);
    EXPECT_NE(std::string(btg_last_error()), "");
    EXPECT_EQ(btg_group_inverse(0, nullptr), BTG_ERR_INVALID_ARGUMENT);
    btg_group_check c{};
    ASSERT_EQ(btg_group_check_run(&c), BTG_OK);
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.multiply_matches, 576);
    char *csv = nullptr;
    ASSERT_EQ(btg_group_table_csv("multiplication", &csv), BTG_OK);
    EXPECT_EQ(take(csv).substr(0, 5), "g,0,1");
    EXPECT_EQ(btg_group_table_csv("bogus", &csv), BTG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, CircuitLifecycle) {
    btg_circuit *c = nullptr;
    ASSERT_EQ(btg_circuit_primitive("inversion", "qubit", 0.0, 0, &c), BTG_OK);
    int wires = 0, qudit = 1;
    btg_circuit_wires(c, &wires);
    btg_circuit_is_qudit(c, &qudit);
    EXPECT_EQ(wires, 5);
    EXPECT_EQ(qudit, 0);
    size_t dim = 0;
    ASSERT_EQ(btg_circuit_dimension(c, &dim), BTG_OK);
    EXPECT_EQ(dim, 32u);
    std::vector<double> u(2 * dim * dim);
    EXPECT_EQ(btg_circuit_unitary(c, u.data(), 10), BTG_ERR_DIMENSION);
    ASSERT_EQ(btg_circuit_unitary(c, u.data(), u.size()), BTG_OK);
    btg_verification v{};
    ASSERT_EQ(btg_circuit_verify(c, "inversion", 0.0, &v), BTG_OK);
    EXPECT_TRUE(v.ok);
    EXPECT_EQ(v.checked, 24u);

    char *text = nullptr;
    ASSERT_EQ(btg_circuit_text(c, &text), BTG_OK);
    const std::string s = take(text);
    btg_circuit *back = nullptr;
    ASSERT_EQ(btg_circuit_from_text(s.c_str(), &back), BTG_OK);
    ASSERT_EQ(btg_circuit_verify(back, "inversion", 0.0, &v), BTG_OK);
    EXPECT_TRUE(v.ok);
    btg_circuit_free(back);
    btg_circuit_free(c);
    EXPECT_EQ(btg_circuit_from_text("wires 2\nfrobnicate 0\n", &back), BTG_ERR_PARSE);
    btg_circuit_free(nullptr);
}

TEST(CApi, LoweredAndRoutedTrace) {
    btg_circuit *c = nullptr;
    ASSERT_EQ(btg_circuit_primitive("trace", "qubit", 0.7, BTG_SYNTH_LOWER | BTG_SYNTH_ROUTE, &c), BTG_OK);
    size_t cnots = 0;
    btg_circuit_cnot_count(c, &cnots);
    EXPECT_GT(cnots, 0u);
    btg_clifford_t_report r{};
    ASSERT_EQ(btg_circuit_clifford_t(c, 1e-8, &r), BTG_OK);
    EXPECT_GT(r.t_count, 0.0);
    btg_circuit_free(c);
    EXPECT_EQ(btg_circuit_primitive("trace", "photonic", 0.7, 0, &c), BTG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, VerifyEveryPrimitiveOnBothArchitectures) {
    for (const char *arch : {"qubit", "qudit"})
        for (const char *p : {"inversion", "mult", "trace", "fourier"}) {
            btg_verification v{};
            ASSERT_EQ(btg_verify_primitive(p, arch, 0.7, &v), BTG_OK) << p << " " << arch;
            EXPECT_TRUE(v.ok) << p << " " << arch;
        }
}

TEST(CApi, SnapIdentity) {
    btg_snap_options o;
    btg_snap_options_default(&o);
    EXPECT_EQ(o.truncation, 48);
    o.truncation = 32;
    o.restarts = 1;
    btg_snap_result *r = nullptr;
    ASSERT_EQ(btg_compile_snap("identity", 1, &o, &r), BTG_OK);
    double inf = 1.0;
    btg_snap_result_infidelity(r, &inf);
    EXPECT_LT(inf, 1e-10);
    char *text = nullptr;
    ASSERT_EQ(btg_snap_result_text(r, &text), BTG_OK);
    EXPECT_FALSE(take(text).empty());
    btg_snap_result_free(r);
    EXPECT_EQ(btg_compile_snap("banana", 1, &o, &r), BTG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Fidelity) {
    btg_fidelity_options o;
    btg_fidelity_options_default(&o);
    EXPECT_EQ(o.shots, 500);
    o.shots = 10;
    o.twirls = 2;
    btg_noise_model clean{0.0, 0.0};
    btg_fidelity_result r{};
    ASSERT_EQ(btg_process_fidelity("inversion", "GI", 0.7, &clean, &o, &r), BTG_OK);
    EXPECT_EQ(r.fidelity, 1.0);
    EXPECT_EQ(btg_process_fidelity("inversion", "99", 0.7, &clean, &o, &r), BTG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Resources) {
    btg_resource_spec s{3, 10, 50, 1e-8};
    double t = 0.0;
    ASSERT_EQ(btg_t_count_total(&s, &t), BTG_OK);
    EXPECT_NEAR(t / 2.0e10, 1.0, 0.05);
    btg_qudit_totals q{};
    ASSERT_EQ(btg_qudit_count_total(&s, &q), BTG_OK);
    EXPECT_NEAR(q.csnap / 1.9e8, 1.0, 0.05);
    char *json = nullptr;
    ASSERT_EQ(btg_resources_json(&s, "qubit", &json), BTG_OK);
    EXPECT_NE(take(json).find("\"totals\""), std::string::npos);
    s.eps = 2.0;
    EXPECT_EQ(btg_t_count_total(&s, &t), BTG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, MonteCarlo) {
    btg_mc_options o;
    btg_mc_options_default(&o);
    EXPECT_EQ(o.thermalization, 500);
    o.dims = 3;
    o.thermalization = 5;
    o.measurements = 20;
    o.bin_size = 2;
    btg_mc_scan *cold = nullptr, *hot = nullptr;
    ASSERT_EQ(btg_mc_run(0.0, 3.0, 4, &o, &cold), BTG_OK);
    o.hot_start = 1;
    ASSERT_EQ(btg_mc_run(0.0, 3.0, 4, &o, &hot), BTG_OK);
    size_t n = 0;
    btg_mc_scan_size(cold, &n);
    EXPECT_EQ(n, 4u);
    btg_mc_point p{};
    ASSERT_EQ(btg_mc_scan_point(cold, 0, &p), BTG_OK);
    EXPECT_EQ(p.acceptance, 1.0);
    EXPECT_EQ(btg_mc_scan_point(cold, 4, &p), BTG_ERR_INVALID_ARGUMENT);
    btg_freezeout f{};
    ASSERT_EQ(btg_mc_freezeout(cold, hot, &f), BTG_OK);
    EXPECT_GT(f.resolution, 0.0);
    char *csv = nullptr;
    ASSERT_EQ(btg_mc_scan_csv(hot, &csv), BTG_OK);
    EXPECT_NE(take(csv).find("hot"), std::string::npos);
    btg_mc_scan_free(cold);
    btg_mc_scan_free(hot);
}

}  // namespace
