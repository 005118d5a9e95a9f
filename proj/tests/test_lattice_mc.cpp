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
#include <random>

#include "lattice_mc.hpp"

namespace btg {
namespace {

TEST(Lattice, ShiftIsPeriodic) {
    const LatticeState s(3, 4);
    EXPECT_EQ(s.volume(), 64);
    EXPECT_EQ(s.link_count(), 192u);
    for (int site = 0; site < s.volume(); ++site)
        for (int mu = 0; mu < 3; ++mu) {
            EXPECT_EQ(s.shift(s.shift(site, mu, 1), mu, -1), site);
            int x = site;
            for (int k = 0; k < 4; ++k) x = s.shift(x, mu, 1);
            EXPECT_EQ(x, site);
        }
    EXPECT_THROW(LatticeState(5, 4), Error);
    EXPECT_THROW(LatticeState(3, 1), Error);
}

TEST(Lattice, ColdPlaquettesAreTwo) {
    const LatticeState s(4, 3);
    for (int site = 0; site < s.volume(); ++site)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) EXPECT_EQ(plaquette_retrace(s, site, mu, nu), 2);
    EXPECT_DOUBLE_EQ(energy_density(s), 0.0);
}

TEST(Lattice, CenterLinkFlipsAffectedPlaquettes) {
    LatticeState s(3, 4);
    s.set_link(0, 0, GroupIndex(1));
    int flipped = 0;
    for (int site = 0; site < s.volume(); ++site)
        for (int mu = 0; mu < 3; ++mu)
            for (int nu = mu + 1; nu < 3; ++nu) {
                const int r = plaquette_retrace(s, site, mu, nu);
                EXPECT_TRUE(r == 2 || r == -2);
                if (r == -2) ++flipped;
            }
    EXPECT_EQ(flipped, 4);
}

TEST(Lattice, GaugeInvariance) {
    std::mt19937_64 rng(3);
    LatticeState s(4, 3);
    s.hot_start(rng);
    const double before = energy_density(s);
    std::vector<int> pl;
    for (int site = 0; site < s.volume(); ++site) pl.push_back(plaquette_retrace(s, site, 1, 3));
    std::uniform_int_distribution<int> pick(0, 23);
    std::vector<GroupIndex> g;
    for (int site = 0; site < s.volume(); ++site) g.emplace_back(pick(rng));
    s.gauge_transform(g);
    EXPECT_DOUBLE_EQ(energy_density(s), before);
    for (int site = 0; site < s.volume(); ++site) EXPECT_EQ(plaquette_retrace(s, site, 1, 3), pl[static_cast<std::size_t>(site)]);
}

TEST(Metropolis, ZeroBetaAcceptsEverything) {
    std::mt19937_64 rng(1);
    LatticeState s(3, 4);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(metropolis_sweep(s, 0.0, rng), 1.0);
    EXPECT_GE(energy_density(s), 0.0);
    EXPECT_LE(energy_density(s), 2.0);
}

double exact_torus_energy(double beta, int plaquettes) {
    auto weights = [&](double b, bool derivative) {
        std::vector<double> c;
        for (int r = 0; r < kIrrepCount; ++r) {
            const Irrep irr = irrep_from_index(r);
            cplx sum = 0.0;
            for (GroupIndex g : all_elements()) {
                const double e = 1.0 - re_trace(g) / 2.0;
                sum += (derivative ? -e : 1.0) * std::exp(-b * e) * std::conj(character(irr, g));
            }
            c.push_back(sum.real() / (24.0 * irrep_dimension(irr)));
        }
        return c;
    };
    const auto c = weights(beta, false), dc = weights(beta, true);
    double z = 0.0, dz = 0.0;
    for (std::size_t r = 0; r < c.size(); ++r) {
        z += std::pow(c[r], plaquettes);
        dz += plaquettes * std::pow(c[r], plaquettes - 1) * dc[r];
    }
    return -dz / z / plaquettes;
}

TEST(Metropolis, MatchesExactTwoDimensionalTorus) {
    for (double beta : {0.8, 2.0}) {
        MCOptions o;
        o.dims = 2;
        o.extent = 2;
        o.thermalization = 200;
        o.measurements = 40000;
        o.bin_size = 200;
        o.seed = 9;
        const MCResult r = run_point(beta, o);
        const double exact = exact_torus_energy(beta, 4);
        EXPECT_NEAR(r.e0, exact, 4.0 * r.error + 1e-3) << beta << " exact " << exact;
    }
}

TEST(Metropolis, StrongCouplingFreezes) {
    MCOptions o;
    o.dims = 3;
    o.thermalization = 50;
    o.measurements = 50;
    o.bin_size = 5;
    const MCResult r = run_point(10.0, o);
    EXPECT_LT(r.e0, 0.1);
    EXPECT_GE(r.e0, 0.0);
}

TEST(Metropolis, Reproducible) {
    MCOptions o;
    o.dims = 3;
    o.thermalization = 10;
    o.measurements = 40;
    o.bin_size = 4;
    o.seed = 17;
    const MCResult a = run_point(1.3, o, 2), b = run_point(1.3, o, 2);
    EXPECT_EQ(a.e0, b.e0);
    EXPECT_EQ(a.error, b.error);
}

TEST(Jackknife, ConstantAndKnownVariance) {
    const JackknifeEstimate c = jackknife(std::vector<double>(100, 0.5), 10);
    EXPECT_DOUBLE_EQ(c.mean, 0.5);
    EXPECT_NEAR(c.error, 0.0, 1e-15);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> n(1.0, 2.0);
    std::vector<double> x(40000);
    for (double &v : x) v = n(rng);
    const JackknifeEstimate e = jackknife(x, 1);
    EXPECT_NEAR(e.error, 2.0 / std::sqrt(40000.0), 1e-3);
}

TEST(Scan, GridAndFreezeoutOnSyntheticData) {
    const auto grid = beta_grid(1.0, 2.0, 11);
    ASSERT_EQ(grid.size(), 11u);
    EXPECT_DOUBLE_EQ(grid.front(), 1.0);
    EXPECT_DOUBLE_EQ(grid.back(), 2.0);
    std::vector<MCResult> cold, hot;
    for (double b : grid) {
        MCResult c{b, b < 1.45 ? 0.9 : 0.1, 0.01, 0.5, 1, 1, StartKind::kCold};
        MCResult h{b, b < 1.65 ? 0.9 : 0.1, 0.01, 0.5, 1, 1, StartKind::kHot};
        cold.push_back(c);
        hot.push_back(h);
    }
    const FreezeoutEstimate f = estimate_freezeout(cold, hot);
    EXPECT_NEAR(f.cold_beta, 1.45, 1e-12);
    EXPECT_NEAR(f.hot_beta, 1.65, 1e-12);
    EXPECT_NEAR(f.beta_f, 1.55, 1e-12);
    EXPECT_TRUE(f.hysteresis);
    EXPECT_NEAR(f.resolution, 0.05, 1e-12);
    EXPECT_EQ(scan_csv(cold).substr(0, 29), "beta,E0,err,acceptance,start\n");
}

}  // namespace
}  // namespace btg
