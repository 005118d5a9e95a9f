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

#include "btgates/btgates.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <variant>

#include "circuit_text.hpp"
#include "error.hpp"
#include "group.hpp"
#include "lattice_mc.hpp"
#include "lowering.hpp"
#include "noise.hpp"
#include "primitives.hpp"
#include "qubit_synth.hpp"
#include "resources.hpp"
#include "routing.hpp"
#include "snap_compile.hpp"

struct btg_circuit {
    std::variant<btg::QubitCircuit, btg::QuditCircuit> circuit;
    std::size_t swaps = 0;
};

struct btg_snap_result {
    btg::SnapCompileResult result;
};

struct btg_mc_scan {
    std::vector<btg::MCResult> points;
};

namespace {

thread_local std::string g_last_error;

btg_status fail(btg_status s, const std::string &message) {
    g_last_error = message;
    return s;
}

template <typename F>
btg_status guarded(F &&f) {
    try {
        g_last_error.clear();
        f();
        return BTG_OK;
    } catch (const btg::Error &e) {
        return fail(static_cast<btg_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc &) {
        return fail(BTG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(BTG_ERR_INTERNAL, e.what());
    }
}

void require(bool condition, const char *message) {
    if (!condition) throw btg::Error(btg::ErrorCode::kInvalidArgument, message);
}

char *duplicate(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_string(char **out, const std::string &s) {
    require(out != nullptr, "output pointer is null");
    *out = duplicate(s);
}

btg::NoiseModel noise_of(const btg_noise_model *n) {
    require(n != nullptr, "noise model is null");
    btg::NoiseModel m = btg::NoiseModel::depolarizing(n->depolarizing);
    m.coherent_zx = n->coherent_zx;
    m.validate();
    return m;
}

btg::FidelityOptions fidelity_options_of(const btg_fidelity_options *o) {
    btg::FidelityOptions f;
    if (o) {
        f.shots = o->shots;
        f.twirls = o->twirls;
        f.seed = o->seed;
        f.twirl = o->twirl != 0;
    }
    return f;
}

btg::ResourceSpec spec_of(const btg_resource_spec *s) {
    require(s != nullptr, "resource spec is null");
    btg::ResourceSpec r{s->d, s->L, s->nt, s->eps};
    r.validate();
    return r;
}

btg::SnapCompileOptions snap_options_of(const btg_snap_options *o) {
    btg::SnapCompileOptions s;
    if (o) {
        s.truncation = o->truncation;
        s.seed = o->seed;
        s.restarts = o->restarts;
        s.max_iterations = o->max_iterations;
        s.target_infidelity = o->target_infidelity;
    }
    return s;
}

btg::MCOptions mc_options_of(const btg_mc_options *o) {
    btg::MCOptions m;
    if (o) {
        m.dims = o->dims;
        m.extent = o->extent;
        m.thermalization = o->thermalization;
        m.measurements = o->measurements;
        m.bin_size = o->bin_size;
        m.seed = o->seed;
        m.start = o->hot_start ? btg::StartKind::kHot : btg::StartKind::kCold;
    }
    return m;
}

btg_verification verification_of(const btg::VerificationResult &v) {
    return {v.checked, v.correct, v.max_error, v.ok() ? 1 : 0};
}

}  // namespace

extern "C" {

const char *btg_version(void) { return "0.1.0"; }

const char *btg_last_error(void) { return g_last_error.c_str(); }

const char *btg_status_name(btg_status status) {
    switch (status) {
        case BTG_OK: return "ok";
        case BTG_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BTG_ERR_ENCODING: return "encoding";
        case BTG_ERR_INTERNAL: return "internal";
        case BTG_ERR_NOT_UNITARY: return "not unitary";
        case BTG_ERR_DIMENSION: return "dimension";
        case BTG_ERR_PARSE: return "parse";
        case BTG_ERR_IO: return "io";
        case BTG_ERR_UNSUPPORTED: return "unsupported";
    }
    return "unknown";
}

void btg_string_free(char *s) { std::free(s); }

btg_status btg_group_multiply(int g, int h, int *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::multiply_oracle(btg::GroupIndex(g), btg::GroupIndex(h)).value();
    });
}

btg_status btg_group_inverse(int g, int *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::inverse_oracle(btg::GroupIndex(g)).value();
    });
}

btg_status btg_group_re_trace(int g, int *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::re_trace(btg::GroupIndex(g));
    });
}

btg_status btg_group_element_order(int g, int *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::element_order(btg::GroupIndex(g));
    });
}

btg_status btg_group_check_run(btg_group_check *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        const btg::GroupCheckReport r = btg::group_self_check();
        *out = {r.inverse_matches, r.multiply_matches, r.orthogonality_error, r.class_data_ok ? 1 : 0, r.published_mismatches,
                r.ok() ? 1 : 0};
    });
}

btg_status btg_group_table_csv(const char *kind, char **out) {
    return guarded([&] {
        require(kind != nullptr, "table kind is null");
        const std::string k(kind);
        if (k == "elements") put_string(out, btg::element_table_csv());
        else if (k == "multiplication") put_string(out, btg::multiplication_table_csv());
        else throw btg::Error(btg::ErrorCode::kInvalidArgument, "table kind must be elements or multiplication");
    });
}

btg_status btg_circuit_primitive(const char *primitive, const char *arch, double theta, int flags, btg_circuit **out) {
    return guarded([&] {
        require(primitive && arch && out, "null argument");
        const std::string p = btg::canonical_primitive(primitive);
        const btg::Arch a = btg::arch_from_name(arch);
        require((flags & ~(BTG_SYNTH_LOWER | BTG_SYNTH_ROUTE)) == 0, "unknown synthesis flag");
        auto c = std::make_unique<btg_circuit>();
        if (a == btg::Arch::kQudit) {
            require(flags == 0, "lowering and routing apply to qubit circuits only");
            c->circuit = btg::build_qudit_primitive(p, theta);
        } else {
            btg::QubitCircuit q = btg::build_qubit_primitive(p, theta);
            if (flags) q = btg::lower_to_cnot(q);
            if (flags & BTG_SYNTH_ROUTE) {
                btg::RoutedCircuit r = btg::route_best(q, btg::CouplingGraph::nairobi());
                c->swaps = r.swaps;
                q = std::move(r.circuit);
            }
            c->circuit = std::move(q);
        }
        *out = c.release();
    });
}

btg_status btg_circuit_from_text(const char *text, btg_circuit **out) {
    return guarded([&] {
        require(text && out, "null argument");
        auto c = std::make_unique<btg_circuit>();
        if (btg::text_is_qudit(text)) c->circuit = btg::qudit_circuit_from_text(text);
        else c->circuit = btg::qubit_circuit_from_text(text);
        *out = c.release();
    });
}

void btg_circuit_free(btg_circuit *c) { delete c; }

btg_status btg_circuit_is_qudit(const btg_circuit *c, int *out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = std::holds_alternative<btg::QuditCircuit>(c->circuit) ? 1 : 0;
    });
}

btg_status btg_circuit_wires(const btg_circuit *c, int *out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = std::visit([](const auto &x) { return x.wires(); }, c->circuit);
    });
}

btg_status btg_circuit_gate_count(const btg_circuit *c, size_t *out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = std::visit([](const auto &x) { return x.size(); }, c->circuit);
    });
}

btg_status btg_circuit_cnot_count(const btg_circuit *c, size_t *out) {
    return guarded([&] {
        require(c && out, "null argument");
        const auto *q = std::get_if<btg::QubitCircuit>(&c->circuit);
        *out = q ? q->count(btg::QubitGateKind::kCnot) + 3 * q->count(btg::QubitGateKind::kSwap) : 0;
    });
}

btg_status btg_circuit_swap_count(const btg_circuit *c, size_t *out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = c->swaps;
    });
}

btg_status btg_circuit_text(const btg_circuit *c, char **out) {
    return guarded([&] {
        require(c != nullptr, "null circuit");
        put_string(out, std::visit([](const auto &x) { return btg::to_text(x); }, c->circuit));
    });
}

btg_status btg_circuit_counts_csv(const btg_circuit *c, char **out) {
    return guarded([&] {
        require(c != nullptr, "null circuit");
        put_string(out, std::visit([](const auto &x) { return btg::gate_count_csv(x); }, c->circuit));
    });
}

btg_status btg_circuit_dimension(const btg_circuit *c, size_t *out) {
    return guarded([&] {
        require(c && out, "null argument");
        if (const auto *q = std::get_if<btg::QubitCircuit>(&c->circuit)) {
            *out = std::size_t{1} << q->wires();
        } else {
            const auto &d = std::get<btg::QuditCircuit>(c->circuit);
            std::size_t n = 1;
            for (int w = 0; w < d.wires(); ++w) n *= static_cast<std::size_t>(d.dimension());
            *out = n;
        }
    });
}

btg_status btg_circuit_unitary(const btg_circuit *c, double *out, size_t capacity) {
    return guarded([&] {
        require(c && out, "null argument");
        const btg::CMatrix u = std::visit([](const auto &x) { return btg::unitary_of(x); }, c->circuit);
        const std::size_t n = static_cast<std::size_t>(u.rows());
        if (capacity < 2 * n * n) throw btg::Error(btg::ErrorCode::kDimension, "output buffer too small");
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                const btg::cplx v = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k));
                out[2 * (r * n + k)] = v.real();
                out[2 * (r * n + k) + 1] = v.imag();
            }
    });
}

btg_status btg_circuit_verify(const btg_circuit *c, const char *primitive, double theta, btg_verification *out) {
    return guarded([&] {
        require(c && primitive && out, "null argument");
        *out = verification_of(btg::verify_circuit_text(std::visit([](const auto &x) { return btg::to_text(x); }, c->circuit),
                                                        primitive, theta));
    });
}

btg_status btg_verify_primitive(const char *primitive, const char *arch, double theta, btg_verification *out) {
    return guarded([&] {
        require(primitive && arch && out, "null argument");
        *out = verification_of(btg::verify_primitive(primitive, btg::arch_from_name(arch), theta));
    });
}

btg_status btg_circuit_clifford_t(const btg_circuit *c, double eps, btg_clifford_t_report *out) {
    return guarded([&] {
        require(c && out, "null argument");
        const auto *q = std::get_if<btg::QubitCircuit>(&c->circuit);
        if (!q) throw btg::Error(btg::ErrorCode::kUnsupported, "Clifford+T lowering applies to qubit circuits");
        const btg::CliffordTReport r = btg::lower_to_clifford_t(*q, eps);
        *out = {r.t_gates, r.rotations, r.t_per_rotation, r.t_count, r.ancillas, r.cnots};
    });
}

void btg_snap_options_default(btg_snap_options *out) {
    if (!out) return;
    const btg::SnapCompileOptions d;
    *out = {d.truncation, d.seed, d.restarts, d.max_iterations, d.target_infidelity};
}

btg_status btg_compile_snap(const char *target, int layers, const btg_snap_options *options, btg_snap_result **out) {
    return guarded([&] {
        require(target && out, "null argument");
        const std::string t(target);
        btg::CMatrix u;
        if (t == "fourier") u = btg::fourier_matrix();
        else if (t == "identity") u = btg::CMatrix::Identity(btg::kSnapLevels, btg::kSnapLevels);
        else throw btg::Error(btg::ErrorCode::kInvalidArgument, "target must be fourier or identity");
        auto r = std::make_unique<btg_snap_result>();
        r->result = btg::compile_snap_displacement(u, layers, snap_options_of(options));
        *out = r.release();
    });
}

btg_status btg_compile_snap_matrix(const double *target, int layers, const btg_snap_options *options, btg_snap_result **out) {
    return guarded([&] {
        require(target && out, "null argument");
        btg::CMatrix u(btg::kSnapLevels, btg::kSnapLevels);
        for (int r = 0; r < btg::kSnapLevels; ++r)
            for (int k = 0; k < btg::kSnapLevels; ++k) {
                const std::size_t i = 2 * static_cast<std::size_t>(r * btg::kSnapLevels + k);
                u(r, k) = btg::cplx(target[i], target[i + 1]);
            }
        auto res = std::make_unique<btg_snap_result>();
        res->result = btg::compile_snap_displacement(u, layers, snap_options_of(options));
        *out = res.release();
    });
}

void btg_snap_result_free(btg_snap_result *r) { delete r; }

btg_status btg_snap_result_infidelity(const btg_snap_result *r, double *out) {
    return guarded([&] {
        require(r && out, "null argument");
        *out = r->result.infidelity;
    });
}

btg_status btg_snap_result_truncation_error(const btg_snap_result *r, double *out) {
    return guarded([&] {
        require(r && out, "null argument");
        *out = r->result.truncation_error;
    });
}

btg_status btg_snap_result_restarts(const btg_snap_result *r, int *out) {
    return guarded([&] {
        require(r && out, "null argument");
        *out = r->result.restarts_run;
    });
}

btg_status btg_snap_result_text(const btg_snap_result *r, char **out) {
    return guarded([&] {
        require(r != nullptr, "null result");
        put_string(out, btg::ansatz_to_text(r->result.ansatz, r->result.infidelity));
    });
}

void btg_fidelity_options_default(btg_fidelity_options *out) {
    if (!out) return;
    const btg::FidelityOptions d;
    *out = {d.shots, d.twirls, d.seed, d.twirl ? 1 : 0};
}

btg_status btg_process_fidelity(const char *primitive, const char *state, double theta, const btg_noise_model *noise,
                                const btg_fidelity_options *options, btg_fidelity_result *out) {
    return guarded([&] {
        require(primitive && state && out, "null argument");
        const btg::NoisyExperiment e = btg::prepare_experiment(btg::primitive_from_name(primitive), theta);
        const btg::FidelityResult r =
            btg::process_fidelity(e, btg::InputState::from_label(state), noise_of(noise), fidelity_options_of(options));
        *out = {r.fidelity, r.error, e.cnots};
    });
}

btg_status btg_experiment_table(const btg_noise_model *noise, const btg_fidelity_options *options, double theta,
                                btg_experiment_summary *summary, char **csv) {
    return guarded([&] {
        const btg::ExperimentTable t = btg::experiment_table(noise_of(noise), fidelity_options_of(options), theta);
        if (summary) *summary = {t.trace_mean, t.inversion_mean, t.gi_inversion, t.trace_cnots, t.inversion_cnots};
        if (csv) *csv = duplicate(btg::experiment_csv(t));
    });
}

btg_status btg_calibrate_depolarizing(double target, const btg_fidelity_options *options, double theta, double *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::calibrate_depolarizing(target, fidelity_options_of(options), theta);
    });
}

btg_status btg_t_count_total(const btg_resource_spec *spec, double *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::t_count_total(spec_of(spec));
    });
}

btg_status btg_fourier_fraction(const btg_resource_spec *spec, double *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = btg::fourier_fraction(spec_of(spec));
    });
}

btg_status btg_qudit_count_total(const btg_resource_spec *spec, btg_qudit_totals *out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        const btg::QuditCost c = btg::qudit_count_total(spec_of(spec));
        *out = {c.csnap, c.snap, c.displacement};
    });
}

btg_status btg_resources_json(const btg_resource_spec *spec, const char *arch, char **out) {
    return guarded([&] {
        require(arch != nullptr, "null architecture");
        put_string(out, btg::resource_report_json(spec_of(spec), arch));
    });
}

void btg_mc_options_default(btg_mc_options *out) {
    if (!out) return;
    const btg::MCOptions d;
    *out = {d.dims, d.extent, d.thermalization, d.measurements, d.bin_size, d.seed, d.start == btg::StartKind::kHot ? 1 : 0};
}

btg_status btg_mc_run(double beta_min, double beta_max, int steps, const btg_mc_options *options, btg_mc_scan **out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        auto s = std::make_unique<btg_mc_scan>();
        s->points = btg::scan(btg::beta_grid(beta_min, beta_max, steps), mc_options_of(options));
        *out = s.release();
    });
}

void btg_mc_scan_free(btg_mc_scan *s) { delete s; }

btg_status btg_mc_scan_size(const btg_mc_scan *s, size_t *out) {
    return guarded([&] {
        require(s && out, "null argument");
        *out = s->points.size();
    });
}

btg_status btg_mc_scan_point(const btg_mc_scan *s, size_t index, btg_mc_point *out) {
    return guarded([&] {
        require(s && out, "null argument");
        require(index < s->points.size(), "scan index out of range");
        const btg::MCResult &r = s->points[index];
        *out = {r.beta, r.e0, r.error, r.acceptance, r.start == btg::StartKind::kHot ? 1 : 0};
    });
}

btg_status btg_mc_scan_csv(const btg_mc_scan *s, char **out) {
    return guarded([&] {
        require(s != nullptr, "null scan");
        put_string(out, btg::scan_csv(s->points));
    });
}

btg_status btg_mc_freezeout(const btg_mc_scan *cold, const btg_mc_scan *hot, btg_freezeout *out) {
    return guarded([&] {
        require(cold && hot && out, "null argument");
        const btg::FreezeoutEstimate f = btg::estimate_freezeout(cold->points, hot->points);
        *out = {f.cold_beta, f.hot_beta, f.largest_jump, f.hysteresis ? 1 : 0, f.hysteresis_min, f.hysteresis_max, f.beta_f,
                f.resolution};
    });
}

}  // extern "C"
