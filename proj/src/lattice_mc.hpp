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

// Metropolis Monte Carlo of the Wilson gauge action with links in the binary
// tetrahedral group on periodic L^D lattices,
//
//     S = beta * sum_p (1 - Re Tr U_p / 2),     E_0 = 1 - <Re Tr U_p / 2>.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "group.hpp"

namespace btg {

enum class StartKind { kCold, kHot };
std::string_view start_name(StartKind s);
/// Throws Error(kInvalidArgument) for anything but "hot" or "cold".
StartKind start_from_name(std::string_view name);

class LatticeState {
  public:
    /// Throws Error(kInvalidArgument) unless 2 <= dims <= 4 and extent >= 2.
    LatticeState(int dims, int extent = 4);

    int dims() const noexcept { return dims_; }
    int extent() const noexcept { return extent_; }
    int volume() const noexcept { return volume_; }
    std::size_t link_count() const noexcept { return links_.size(); }

    GroupIndex link(int site, int mu) const;
    void set_link(int site, int mu, GroupIndex g);
    /// Neighbouring site one step forward (+1) or backward (-1) along mu.
    int shift(int site, int mu, int step) const;

    void cold_start();
    void hot_start(std::mt19937_64 &rng);
    /// U_mu(x) -> g(x) U_mu(x) g(x + mu)^-1 for the given site transformation.
    void gauge_transform(const std::vector<GroupIndex> &g);

  private:
    int dims_, extent_, volume_;
    std::vector<std::uint8_t> links_;
};

/// Re Tr rho_4(U_mu(x) U_nu(x+mu) U_mu(x+nu)^-1 U_nu(x)^-1) for mu != nu.
int plaquette_retrace(const LatticeState &s, int site, int mu, int nu);

/// 1 - average of Re Tr U_p / 2 over all plaquettes.
double energy_density(const LatticeState &s);

/// One lexicographic Metropolis pass with proposals U -> U r, r != 1
/// uniform; returns the acceptance rate.
double metropolis_sweep(LatticeState &s, double beta, std::mt19937_64 &rng);

struct MCOptions {
    int dims = 4;
    int extent = 4;
    int thermalization = 500;
    int measurements = 2000;
    int bin_size = 20;
    std::uint64_t seed = 1;
    StartKind start = StartKind::kCold;
};

struct MCResult {
    double beta = 0.0;
    double e0 = 0.0;
    double error = 0.0;
    double acceptance = 0.0;
    int thermalization = 0;
    int measurements = 0;
    StartKind start = StartKind::kCold;
};

struct JackknifeEstimate {
    double mean = 0.0;
    double error = 0.0;
};
/// Mean and jackknife error over bins of `bin_size` consecutive samples.
JackknifeEstimate jackknife(const std::vector<double> &samples, int bin_size);

/// One Markov chain at fixed beta; the seed stream is keyed by (seed, index).
MCResult run_point(double beta, const MCOptions &options, std::uint64_t index = 0);

std::vector<double> beta_grid(double beta_min, double beta_max, int steps);

/// Independent chains, one per beta.
std::vector<MCResult> scan(const std::vector<double> &betas, const MCOptions &options);

struct FreezeoutEstimate {
    /// Midpoint of the adjacent grid pair with the largest |dE0/dbeta|, per start.
    double cold_beta = 0.0;
    double hot_beta = 0.0;
    double largest_jump = 0.0;
    /// Betas where hot and cold values differ by more than 3 combined sigma.
    double hysteresis_min = 0.0;
    double hysteresis_max = 0.0;
    bool hysteresis = false;
    /// Midpoint of the hot and cold jump locations.
    double beta_f = 0.0;
    /// Half the grid spacing.
    double resolution = 0.0;
};

/// Both scans on the same beta grid.
FreezeoutEstimate estimate_freezeout(const std::vector<MCResult> &cold, const std::vector<MCResult> &hot);

/// Columns beta,E0,err,acceptance,start.
std::string scan_csv(const std::vector<MCResult> &results);

}  // namespace btg
