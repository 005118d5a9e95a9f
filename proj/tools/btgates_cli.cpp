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

// Command-line front end; uses only the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "btgates/btgates.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CliFailure {
    int code;
    std::string message;
};

void check(btg_status s) {
    if (s == BTG_OK) return;
    const int code = s == BTG_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
    throw CliFailure{code, std::string(btg_status_name(s)) + ": " + btg_last_error()};
}

std::string take(char *s) {
    std::string out(s ? s : "");
    btg_string_free(s);
    return out;
}

void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliFailure{kExitFailure, "cannot write " + path};
    f << content;
    if (!f) throw CliFailure{kExitFailure, "cannot write " + path};
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw CliFailure{kExitFailure, "cannot read " + path};
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("BTGATES_SEED")) {
        char *end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 1;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct CircuitHandle {
    btg_circuit *c = nullptr;
    ~CircuitHandle() { btg_circuit_free(c); }
};

// ---- group ----

struct GroupArgs {
    std::string action = "check";
};

int run_group(const GroupArgs &a) {
    if (a.action == "table" || a.action == "elements") {
        char *csv = nullptr;
        check(btg_group_table_csv(a.action == "table" ? "multiplication" : "elements", &csv));
        std::cout << take(csv);
        return kExitOk;
    }
    btg_group_check r{};
    check(btg_group_check_run(&r));
    std::cout << "closed-form inverse: " << r.inverse_matches << "/24 match\n"
              << "closed-form multiply: " << r.multiply_matches << "/576 match\n"
              << "character orthogonality error: " << fmt(r.orthogonality_error) << '\n'
              << "class sizes and orders: " << (r.class_data_ok ? "ok" : "mismatch") << '\n'
              << "published character entries differing from computed: " << r.published_mismatches << '\n';
    return r.ok ? kExitOk : kExitFailure;
}

// ---- synth ----

struct SynthArgs {
    std::string primitive;
    std::string arch = "qubit";
    double theta = 0.7;
    bool lower = false;
    bool route = false;
    std::string emit_path;
    std::string counts_path;
    double t_eps = 0.0;
};

int run_synth(const SynthArgs &a) {
    CircuitHandle h;
    const int flags = (a.lower ? BTG_SYNTH_LOWER : 0) | (a.route ? BTG_SYNTH_ROUTE : 0);
    check(btg_circuit_primitive(a.primitive.c_str(), a.arch.c_str(), a.theta, flags, &h.c));
    char *text = nullptr, *counts = nullptr;
    check(btg_circuit_text(h.c, &text));
    check(btg_circuit_counts_csv(h.c, &counts));
    const std::string circuit = take(text), csv = take(counts);
    emit(a.emit_path, circuit);
    if (!a.counts_path.empty()) emit(a.counts_path, csv);
    else if (!a.emit_path.empty()) std::cout << csv;
    std::size_t cnots = 0, swaps = 0;
    check(btg_circuit_cnot_count(h.c, &cnots));
    check(btg_circuit_swap_count(h.c, &swaps));
    std::cerr << "cnots " << cnots << ", inserted swaps " << swaps << '\n';
    if (a.t_eps > 0.0) {
        btg_clifford_t_report r{};
        check(btg_circuit_clifford_t(h.c, a.t_eps, &r));
        std::cerr << "T gates " << r.t_gates << ", rotations " << r.rotations << ", T count " << fmt(r.t_count) << ", ancillas "
                  << r.ancillas << '\n';
    }
    return kExitOk;
}

// ---- verify ----

struct VerifyArgs {
    std::string file;
    std::string against;
    std::string primitive;
    std::string arch = "qubit";
    bool all = false;
    double theta = 0.7;
};

bool report(const std::string &label, const std::string &primitive, const btg_verification &v) {
    const std::string unit = primitive == "mult" || primitive == "multiplication" ? " pairs" : " states";
    std::cout << label << ": " << v.correct << '/' << v.checked << unit << " correct (max error " << fmt(v.max_error) << ")\n";
    return v.ok != 0;
}

int run_verify(const VerifyArgs &a) {
    bool ok = true;
    if (!a.file.empty()) {
        if (a.against.empty()) throw CliFailure{kExitUsage, "--against is required with a circuit file"};
        CircuitHandle h;
        check(btg_circuit_from_text(read_file(a.file).c_str(), &h.c));
        btg_verification v{};
        check(btg_circuit_verify(h.c, a.against.c_str(), a.theta, &v));
        ok = report(a.file + " vs " + a.against, a.against, v);
    } else {
        std::vector<std::string> primitives, archs;
        if (a.all || a.primitive.empty()) primitives = {"inversion", "mult", "trace", "fourier"};
        else primitives = {a.primitive};
        if (a.all || a.arch == "both") archs = {"qubit", "qudit"};
        else archs = {a.arch};
        for (const std::string &arch : archs)
            for (const std::string &p : primitives) {
                btg_verification v{};
                check(btg_verify_primitive(p.c_str(), arch.c_str(), a.theta, &v));
                ok = report(p + " " + arch, p, v) && ok;
            }
    }
    return ok ? kExitOk : kExitFailure;
}

// ---- compile-snap ----

struct SnapArgs {
    std::string target = "fourier";
    int layers = 24;
    std::uint64_t seed = 1;
    int restarts = 4;
    int iterations = 3000;
    int truncation = 48;
    double target_infidelity = 1e-3;
    std::string out;
};

int run_snap(const SnapArgs &a) {
    btg_snap_options o{};
    btg_snap_options_default(&o);
    o.seed = a.seed;
    o.restarts = a.restarts;
    o.max_iterations = a.iterations;
    o.truncation = a.truncation;
    o.target_infidelity = a.target_infidelity;
    btg_snap_result *r = nullptr;
    check(btg_compile_snap(a.target.c_str(), a.layers, &o, &r));
    double inf = 0.0, trunc = 0.0;
    int restarts = 0;
    char *text = nullptr;
    const btg_status s1 = btg_snap_result_infidelity(r, &inf);
    const btg_status s2 = btg_snap_result_truncation_error(r, &trunc);
    const btg_status s3 = btg_snap_result_restarts(r, &restarts);
    const btg_status s4 = btg_snap_result_text(r, &text);
    btg_snap_result_free(r);
    check(s1);
    check(s2);
    check(s3);
    check(s4);
    emit(a.out, take(text));
    std::cerr << "layers " << a.layers << ", infidelity " << fmt(inf) << ", restarts " << restarts << ", truncation error "
              << fmt(trunc) << '\n';
    return kExitOk;
}

// ---- fidelity ----

struct FidelityArgs {
    std::string primitive = "trace";
    std::string state = "all";
    double theta = 0.7;
    double p = 0.0;
    double coherent = 0.0;
    double calibrate = 0.0;
    bool no_twirl = false;
    int shots = 500;
    int twirls = 20;
    std::uint64_t seed = 1;
    std::string out;
};

int run_fidelity(const FidelityArgs &a) {
    btg_fidelity_options o{};
    btg_fidelity_options_default(&o);
    o.shots = a.shots;
    o.twirls = a.twirls;
    o.seed = a.seed;
    o.twirl = a.no_twirl ? 0 : 1;
    btg_noise_model noise{a.p, a.coherent};
    if (a.calibrate > 0.0) {
        check(btg_calibrate_depolarizing(a.calibrate, &o, a.theta, &noise.depolarizing));
        std::cerr << "calibrated depolarizing rate " << fmt(noise.depolarizing) << '\n';
    }
    if (a.primitive == "all") {
        btg_experiment_summary s{};
        char *csv = nullptr;
        check(btg_experiment_table(&noise, &o, a.theta, &s, &csv));
        emit(a.out, take(csv));
        std::cerr << "trace mean " << fmt(s.trace_mean) << " (" << s.trace_cnots << " CNOTs), inversion mean "
                  << fmt(s.inversion_mean) << " (" << s.inversion_cnots << " CNOTs), |GI> inversion " << fmt(s.gi_inversion)
                  << '\n';
        return kExitOk;
    }
    std::vector<std::string> states;
    if (a.state == "all") {
        for (int g = 0; g < 24; ++g) states.push_back(std::to_string(g));
        if (a.primitive == "inversion") states.push_back("GI");
    } else {
        states.push_back(a.state);
    }
    std::ostringstream csv;
    csv << "primitive,state,shots,twirls,fidelity,error\n";
    for (const std::string &s : states) {
        btg_fidelity_result r{};
        check(btg_process_fidelity(a.primitive.c_str(), s.c_str(), a.theta, &noise, &o, &r));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f,%.6f", r.fidelity, r.error);
        csv << a.primitive << ',' << s << ',' << a.shots << ',' << a.twirls << ',' << buf << '\n';
    }
    emit(a.out, csv.str());
    return kExitOk;
}

// ---- resources ----

struct ResourceArgs {
    int d = 3;
    int L = 10;
    int nt = 50;
    double eps = 1e-8;
    std::string arch = "qubit";
    std::string out;
};

int run_resources(const ResourceArgs &a) {
    const btg_resource_spec spec{a.d, a.L, a.nt, a.eps};
    char *json = nullptr;
    check(btg_resources_json(&spec, a.arch.c_str(), &json));
    emit(a.out, take(json));
    return kExitOk;
}

// ---- mc ----

struct McArgs {
    int dim = 4;
    int extent = 4;
    double beta_min = 0.0;
    double beta_max = 4.0;
    int beta_steps = 9;
    int sweeps = 2000;
    int therm = 500;
    int bin = 20;
    std::uint64_t seed = 1;
    std::string start = "cold";
    std::string out;
};

struct ScanHandle {
    btg_mc_scan *s = nullptr;
    ~ScanHandle() { btg_mc_scan_free(s); }
};

int run_mc(const McArgs &a) {
    btg_mc_options o{};
    btg_mc_options_default(&o);
    o.dims = a.dim;
    o.extent = a.extent;
    o.thermalization = a.therm;
    o.measurements = a.sweeps;
    o.bin_size = a.bin;
    o.seed = a.seed;
    std::string csv;
    ScanHandle cold, hot;
    if (a.start == "cold" || a.start == "both") {
        o.hot_start = 0;
        check(btg_mc_run(a.beta_min, a.beta_max, a.beta_steps, &o, &cold.s));
        char *text = nullptr;
        check(btg_mc_scan_csv(cold.s, &text));
        csv = take(text);
    }
    if (a.start == "hot" || a.start == "both") {
        o.hot_start = 1;
        check(btg_mc_run(a.beta_min, a.beta_max, a.beta_steps, &o, &hot.s));
        char *text = nullptr;
        check(btg_mc_scan_csv(hot.s, &text));
        const std::string h = take(text);
        csv += csv.empty() ? h : h.substr(h.find('\n') + 1);
    }
    emit(a.out, csv);
    if (cold.s && hot.s && a.beta_steps >= 2) {
        btg_freezeout f{};
        check(btg_mc_freezeout(cold.s, hot.s, &f));
        std::cerr << "freezeout beta " << fmt(f.beta_f) << " +- " << fmt(f.resolution) << " (cold jump " << fmt(f.cold_beta)
                  << ", hot jump " << fmt(f.hot_beta) << ")\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Binary tetrahedral group gates: synthesis, verification, noise, resources and Monte Carlo"};
    app.require_subcommand(1);

    GroupArgs group;
    auto *g = app.add_subcommand("group", "group tables and closed-form checks");
    g->add_option("action", group.action, "table | elements | check")->check(CLI::IsMember({"table", "elements", "check"}));

    SynthArgs synth;
    auto *s = app.add_subcommand("synth", "build a primitive circuit");
    s->add_option("primitive", synth.primitive, "inversion | mult | trace | fourier")->required();
    s->add_option("--arch", synth.arch, "qubit | qudit")->check(CLI::IsMember({"qubit", "qudit"}));
    s->add_option("--theta", synth.theta, "trace angle");
    s->add_flag("--lower", synth.lower, "lower to CNOT and 1-qubit gates");
    s->add_flag("--route", synth.route, "lower and route on the 7-qubit coupling graph");
    s->add_option("--emit", synth.emit_path, "circuit text output file");
    s->add_option("--counts", synth.counts_path, "gate-count CSV output file");
    s->add_option("--t-count", synth.t_eps, "report Clifford+T cost at this rotation precision");

    VerifyArgs verify;
    auto *v = app.add_subcommand("verify", "check circuits against the group oracles");
    v->add_option("file", verify.file, "circuit text file");
    v->add_option("--against", verify.against, "primitive the file implements");
    v->add_option("--primitive", verify.primitive, "inversion | mult | trace | fourier");
    v->add_option("--arch", verify.arch, "qubit | qudit | both")->check(CLI::IsMember({"qubit", "qudit", "both"}));
    v->add_flag("--all", verify.all, "all primitives on both architectures");
    v->add_option("--theta", verify.theta, "trace angle");

    SnapArgs snap;
    snap.seed = default_seed();
    auto *c = app.add_subcommand("compile-snap", "compile a 24-level unitary into SNAP and displacement layers");
    c->add_option("--target", snap.target, "fourier | identity")->check(CLI::IsMember({"fourier", "identity"}));
    c->add_option("--layers", snap.layers, "number of SNAP layers K");
    c->add_option("--seed", snap.seed, "restart seed");
    c->add_option("--restarts", snap.restarts, "optimizer restarts");
    c->add_option("--iterations", snap.iterations, "iterations per restart");
    c->add_option("--truncation", snap.truncation, "Fock-space truncation");
    c->add_option("--target-infidelity", snap.target_infidelity, "stop restarting below this infidelity");
    c->add_option("--out", snap.out, "parameter file");

    FidelityArgs fid;
    fid.seed = default_seed();
    auto *f = app.add_subcommand("fidelity", "noisy process-fidelity simulation");
    f->add_option("--primitive", fid.primitive, "trace | inversion | all")->check(CLI::IsMember({"trace", "inversion", "all"}));
    f->add_option("--state", fid.state, "0..23, GI or all");
    f->add_option("--theta", fid.theta, "trace angle");
    f->add_option("--p", fid.p, "two-qubit depolarizing rate per CNOT");
    f->add_option("--coherent", fid.coherent, "coherent ZX over-rotation per CNOT");
    f->add_option("--calibrate", fid.calibrate, "choose the rate giving this mean trace fidelity");
    f->add_flag("--no-twirl", fid.no_twirl, "disable Pauli twirling");
    f->add_option("--shots", fid.shots, "shots per twirl");
    f->add_option("--twirls", fid.twirls, "twirled circuit instances");
    f->add_option("--seed", fid.seed, "seed");
    f->add_option("--out", fid.out, "CSV output file");

    ResourceArgs res;
    auto *r = app.add_subcommand("resources", "fault-tolerant resource estimates");
    r->add_option("--d", res.d, "spatial dimension");
    r->add_option("--L", res.L, "lattice extent");
    r->add_option("--nt", res.nt, "Trotter steps");
    r->add_option("--eps", res.eps, "rotation synthesis precision");
    r->add_option("--arch", res.arch, "qubit | qudit")->check(CLI::IsMember({"qubit", "qudit"}));
    r->add_option("--out", res.out, "JSON output file");

    McArgs mc;
    mc.seed = default_seed();
    auto *m = app.add_subcommand("mc", "Metropolis scan of the Wilson action");
    m->add_option("--dim", mc.dim, "spacetime dimension")->check(CLI::Range(2, 4));
    m->add_option("--extent", mc.extent, "lattice extent");
    m->add_option("--beta-min", mc.beta_min, "first coupling");
    m->add_option("--beta-max", mc.beta_max, "last coupling");
    m->add_option("--beta-steps", mc.beta_steps, "grid points");
    m->add_option("--sweeps", mc.sweeps, "measurement sweeps");
    m->add_option("--therm", mc.therm, "thermalization sweeps");
    m->add_option("--bin", mc.bin, "jackknife bin size");
    m->add_option("--seed", mc.seed, "seed");
    m->add_option("--start", mc.start, "cold | hot | both")->check(CLI::IsMember({"cold", "hot", "both"}));
    m->add_option("--out", mc.out, "CSV output file");

    if (argc <= 1) {
        std::cerr << app.help();
        return kExitUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }
    try {
        if (*g) return run_group(group);
        if (*s) return run_synth(synth);
        if (*v) return run_verify(verify);
        if (*c) return run_snap(snap);
        if (*f) return run_fidelity(fid);
        if (*r) return run_resources(res);
        if (*m) return run_mc(mc);
    } catch (const CliFailure &e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    }
    return kExitUsage;
}
