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

#include "lattice_mc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "error.hpp"

namespace btg {

namespace {

struct Tables {
    std::array<std::array<std::uint8_t, kGroupOrder>, kGroupOrder> mul{};
    std::array<std::uint8_t, kGroupOrder> inv{};
    std::array<int, kGroupOrder> retrace{};
};

const Tables &tables() {
    static const Tables t = [] {
        Tables r;
        for (int a = 0; a < kGroupOrder; ++a) {
            r.inv[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(inverse_oracle(GroupIndex(a)).value());
            r.retrace[static_cast<std::size_t>(a)] = re_trace(GroupIndex(a));
            for (int b = 0; b < kGroupOrder; ++b)
                r.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    static_cast<std::uint8_t>(multiply_oracle(GroupIndex(a), GroupIndex(b)).value());
        }
        return r;
    }();
    return t;
}

inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return tables().mul[a][b]; }
inline std::uint8_t inv(std::uint8_t a) { return tables().inv[a]; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::string_view start_name(StartKind s) { return s == StartKind::kHot ? "hot" : "cold"; }

StartKind start_from_name(std::string_view name) {
    if (name == "hot") return StartKind::kHot;
    if (name == "cold") return StartKind::kCold;
    throw Error(ErrorCode::kInvalidArgument, "start must be hot or cold");
}

LatticeState::LatticeState(int dims, int extent) : dims_(dims), extent_(extent), volume_(1) {
    if (dims < 2 || dims > 4) throw Error(ErrorCode::kInvalidArgument, "lattice dimension must be 2, 3 or 4");
    if (extent < 2) throw Error(ErrorCode::kInvalidArgument, "lattice extent must be at least 2");
    for (int k = 0; k < dims; ++k) volume_ *= extent;
    links_.assign(static_cast<std::size_t>(volume_) * static_cast<std::size_t>(dims), 0);
}

GroupIndex LatticeState::link(int site, int mu) const {
    return GroupIndex(links_[static_cast<std::size_t>(site) * static_cast<std::size_t>(dims_) + static_cast<std::size_t>(mu)]);
}

void LatticeState::set_link(int site, int mu, GroupIndex g) {
    links_[static_cast<std::size_t>(site) * static_cast<std::size_t>(dims_) + static_cast<std::size_t>(mu)] =
        static_cast<std::uint8_t>(g.value());
}

int LatticeState::shift(int site, int mu, int step) const {
    int stride = 1;
    for (int k = 0; k < mu; ++k) stride *= extent_;
    const int coord = (site / stride) % extent_;
    const int moved = ((coord + step) % extent_ + extent_) % extent_;
    return site + (moved - coord) * stride;
}

void LatticeState::cold_start() { std::fill(links_.begin(), links_.end(), std::uint8_t{0}); }

void LatticeState::hot_start(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> pick(0, kGroupOrder - 1);
    for (auto &l : links_) l = static_cast<std::uint8_t>(pick(rng));
}

void LatticeState::gauge_transform(const std::vector<GroupIndex> &g) {
    if (g.size() != static_cast<std::size_t>(volume_)) throw Error(ErrorCode::kInvalidArgument, "one group element per site required");
    std::vector<std::uint8_t> out(links_.size());
    for (int x = 0; x < volume_; ++x)
        for (int mu = 0; mu < dims_; ++mu) {
            const auto gx = static_cast<std::uint8_t>(g[static_cast<std::size_t>(x)].value());
            const auto gy = static_cast<std::uint8_t>(g[static_cast<std::size_t>(shift(x, mu, 1))].value());
            const std::size_t k = static_cast<std::size_t>(x) * static_cast<std::size_t>(dims_) + static_cast<std::size_t>(mu);
            out[k] = mul(mul(gx, links_[k]), inv(gy));
        }
    links_ = std::move(out);
}

int plaquette_retrace(const LatticeState &s, int site, int mu, int nu) {
    if (mu == nu || mu < 0 || nu < 0 || mu >= s.dims() || nu >= s.dims())
        throw Error(ErrorCode::kInvalidArgument, "plaquette needs two distinct valid directions");
    const auto u = [&s](int x, int d) { return static_cast<std::uint8_t>(s.link(x, d).value()); };
    const std::uint8_t p = mul(mul(u(site, mu), u(s.shift(site, mu, 1), nu)), mul(inv(u(s.shift(site, nu, 1), mu)), inv(u(site, nu))));
    return tables().retrace[p];
}

double energy_density(const LatticeState &s) {
    long long sum = 0, count = 0;
    for (int x = 0; x < s.volume(); ++x)
        for (int mu = 0; mu < s.dims(); ++mu)
            for (int nu = mu + 1; nu < s.dims(); ++nu) {
                sum += plaquette_retrace(s, x, mu, nu);
                ++count;
            }
    return 1.0 - static_cast<double>(sum) / (2.0 * static_cast<double>(count));
}

double metropolis_sweep(LatticeState &s, double beta, std::mt19937_64 &rng) {
    if (!(beta >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "beta must be nonnegative");
    const Tables &t = tables();
    std::uniform_int_distribution<int> pick(1, kGroupOrder - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto u = [&s](int x, int d) { return static_cast<std::uint8_t>(s.link(x, d).value()); };
    std::vector<std::uint8_t> staples;
    long long accepted = 0, proposed = 0;
    for (int x = 0; x < s.volume(); ++x)
        for (int mu = 0; mu < s.dims(); ++mu) {
            staples.clear();
            const int xp = s.shift(x, mu, 1);
            for (int nu = 0; nu < s.dims(); ++nu) {
                if (nu == mu) continue;
                const int xn = s.shift(x, nu, 1), xm = s.shift(x, nu, -1);
                staples.push_back(mul(mul(u(xp, nu), inv(u(xn, mu))), inv(u(x, nu))));
                staples.push_back(mul(mul(inv(u(s.shift(xp, nu, -1), nu)), inv(u(xm, mu))), u(xm, nu)));
            }
            const std::uint8_t old = u(x, mu);
            const std::uint8_t cand = mul(old, static_cast<std::uint8_t>(pick(rng)));
            int delta = 0;
            for (std::uint8_t a : staples) delta += t.retrace[mul(cand, a)] - t.retrace[mul(old, a)];
            const double ds = -0.5 * beta * delta;
            ++proposed;
            if (ds <= 0.0 || unit(rng) < std::exp(-ds)) {
                s.set_link(x, mu, GroupIndex(cand));
                ++accepted;
            }
        }
    return proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
}

JackknifeEstimate jackknife(const std::vector<double> &samples, int bin_size) {
    if (bin_size < 1) throw Error(ErrorCode::kInvalidArgument, "bin size must be positive");
    const std::size_t nbins = samples.size() / static_cast<std::size_t>(bin_size);
    if (nbins < 2) throw Error(ErrorCode::kInvalidArgument, "jackknife needs at least two bins");
    std::vector<double> bins(nbins, 0.0);
    for (std::size_t b = 0; b < nbins; ++b) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(bin_size); ++k) bins[b] += samples[b * static_cast<std::size_t>(bin_size) + k];
        bins[b] /= bin_size;
    }
    double total = 0.0;
    for (double v : bins) total += v;
    const double n = static_cast<double>(nbins);
    const double mean = total / n;
    double var = 0.0;
    for (double v : bins) {
        const double leave_one = (total - v) / (n - 1.0);
        var += (leave_one - mean) * (leave_one - mean);
    }
    return {mean, std::sqrt(var * (n - 1.0) / n)};
}

MCResult run_point(double beta, const MCOptions &options, std::uint64_t index) {
    if (options.thermalization < 0 || options.measurements < 1)
        throw Error(ErrorCode::kInvalidArgument, "sweep counts must be nonnegative with at least one measurement");
    LatticeState s(options.dims, options.extent);
    std::mt19937_64 rng(splitmix64(splitmix64(options.seed) ^ (index * 2 + (options.start == StartKind::kHot ? 1 : 0))));
    if (options.start == StartKind::kHot) s.hot_start(rng);
    for (int k = 0; k < options.thermalization; ++k) metropolis_sweep(s, beta, rng);
    std::vector<double> e;
    double acc = 0.0;
    for (int k = 0; k < options.measurements; ++k) {
        acc += metropolis_sweep(s, beta, rng);
        e.push_back(energy_density(s));
    }
    MCResult r;
    r.beta = beta;
    const int bin = std::min(options.bin_size, std::max(1, options.measurements / 2));
    const JackknifeEstimate j = jackknife(e, bin);
    r.e0 = j.mean;
    r.error = j.error;
    r.acceptance = acc / options.measurements;
    r.thermalization = options.thermalization;
    r.measurements = options.measurements;
    r.start = options.start;
    return r;
}

std::vector<double> beta_grid(double beta_min, double beta_max, int steps) {
    if (steps < 1 || !(beta_min >= 0.0) || !(beta_max >= beta_min))
        throw Error(ErrorCode::kInvalidArgument, "beta grid needs 0 <= min <= max and at least one step");
    std::vector<double> out;
    for (int k = 0; k < steps; ++k) out.push_back(steps == 1 ? beta_min : beta_min + (beta_max - beta_min) * k / (steps - 1));
    return out;
}

std::vector<MCResult> scan(const std::vector<double> &betas, const MCOptions &options) {
    std::vector<MCResult> out;
    for (std::size_t k = 0; k < betas.size(); ++k) out.push_back(run_point(betas[k], options, k));
    return out;
}

FreezeoutEstimate estimate_freezeout(const std::vector<MCResult> &cold, const std::vector<MCResult> &hot) {
    if (cold.size() != hot.size() || cold.size() < 2)
        throw Error(ErrorCode::kInvalidArgument, "freezeout needs matching scans with at least two points");
    FreezeoutEstimate f;
    auto steepest = [&f](const std::vector<MCResult> &r) {
        std::size_t best = 0;
        double slope = -1.0;
        for (std::size_t k = 0; k + 1 < r.size(); ++k) {
            const double s = std::abs(r[k + 1].e0 - r[k].e0) / (r[k + 1].beta - r[k].beta);
            if (s > slope) {
                slope = s;
                best = k;
            }
        }
        f.largest_jump = std::max(f.largest_jump, std::abs(r[best + 1].e0 - r[best].e0));
        return 0.5 * (r[best].beta + r[best + 1].beta);
    };
    f.cold_beta = steepest(cold);
    f.hot_beta = steepest(hot);
    f.resolution = 0.5 * (cold[1].beta - cold[0].beta);
    for (std::size_t k = 0; k < cold.size(); ++k) {
        const double sigma = std::hypot(cold[k].error, hot[k].error);
        if (std::abs(cold[k].e0 - hot[k].e0) > 3.0 * sigma && std::abs(cold[k].e0 - hot[k].e0) > 1e-3) {
            if (!f.hysteresis) f.hysteresis_min = cold[k].beta;
            f.hysteresis_max = cold[k].beta;
            f.hysteresis = true;
        }
    }
    f.beta_f = 0.5 * (f.cold_beta + f.hot_beta);
    return f;
}

std::string scan_csv(const std::vector<MCResult> &results) {
    std::ostringstream out;
    out << "beta,E0,err,acceptance,start\n";
    char buf[96];
    for (const MCResult &r : results) {
        std::snprintf(buf, sizeof buf, "%.6f,%.8f,%.8f,%.6f,", r.beta, r.e0, r.error, r.acceptance);
        out << buf << start_name(r.start) << '\n';
    }
    return out.str();
}

}  // namespace btg
