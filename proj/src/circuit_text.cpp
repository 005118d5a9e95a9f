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

#include "circuit_text.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace btg {

namespace {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string> tokens(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

struct LineError {
    int line;
    [[noreturn]] void fail(const std::string &what) const {
        throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
    }
    int to_int(const std::string &s) const {
        int v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) fail("expected an integer, got '" + s + "'");
        return v;
    }
    double to_double(const std::string &s) const {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) fail("expected a number, got '" + s + "'");
            return v;
        } catch (const std::logic_error &) {
            fail("expected a number, got '" + s + "'");
        }
    }
    std::vector<int> int_list(const std::string &s) const {
        std::vector<int> out;
        for (const auto &p : split(s, ',')) out.push_back(to_int(p));
        return out;
    }
};

template <class Fn>
void for_each_line(std::string_view text, Fn &&fn) {
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        ++number;
        std::string_view line = text.substr(start, end - start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = tokens(line);
        if (!toks.empty()) fn(number, toks);
        start = end + 1;
    }
}

std::string join_ints(const std::vector<int> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

std::string to_text(const QubitCircuit &c) {
    std::ostringstream out;
    out << "wires " << c.wires() << '\n';
    if (!c.name().empty()) out << "name " << c.name() << '\n';
    for (const QubitGate &g : c.gates()) {
        out << gate_name(g.kind) << ' ' << join_ints(g.wires());
        if (g.angle) out << " @" << format_double(*g.angle);
        if (std::find(g.polarity.begin(), g.polarity.end(), false) != g.polarity.end()) {
            out << " pol=";
            for (bool b : g.polarity) out << (b ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

std::string to_text(const QuditCircuit &c) {
    std::ostringstream out;
    out << "wires " << c.wires() << '\n' << "dim " << c.dimension() << '\n';
    if (!c.name().empty()) out << "name " << c.name() << '\n';
    auto phases = [&](const std::vector<double> &p) {
        out << " phases ";
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? ";" : "") << format_double(p[k]);
    };
    for (const QuditGate &g : c.gates()) {
        out << gate_name(g.kind) << ' ';
        if (g.kind == QuditGateKind::kCSnap) {
            out << g.control_wire << ',' << g.wire << " level " << g.control_level;
            phases(g.phases);
        } else {
            out << g.wire;
            if (g.kind == QuditGateKind::kSnap) phases(g.phases);
            if (g.kind == QuditGateKind::kDisplacement)
                out << " alpha " << format_double(g.alpha.real()) << ',' << format_double(g.alpha.imag());
            if (g.is_givens()) {
                if (g.kind != QuditGateKind::kX) out << " @" << format_double(g.angle);
                out << " levels " << g.level_a << ',' << g.level_b;
            }
        }
        out << '\n';
    }
    return out.str();
}

bool text_is_qudit(std::string_view text) {
    bool found = false;
    for_each_line(text, [&](int, const std::vector<std::string> &t) {
        if (t[0] == "dim") found = true;
    });
    return found;
}

QubitCircuit qubit_circuit_from_text(std::string_view text) {
    int wires = -1;
    std::string name;
    std::vector<std::pair<int, QubitGate>> gates;
    for_each_line(text, [&](int number, const std::vector<std::string> &t) {
        const LineError e{number};
        if (t[0] == "wires") {
            if (t.size() != 2) e.fail("usage: wires N");
            wires = e.to_int(t[1]);
            return;
        }
        if (t[0] == "name") {
            if (t.size() != 2) e.fail("usage: name NAME");
            name = t[1];
            return;
        }
        if (t[0] == "dim") e.fail("qudit header in a qubit circuit");
        const auto kind = gate_kind_from_name(t[0]);
        if (!kind) e.fail("unknown gate '" + t[0] + "'");
        if (t.size() < 2) e.fail("missing wire list");
        const std::vector<int> w = e.int_list(t[1]);
        QubitGate g;
        g.kind = *kind;
        const int n_targets = (*kind == QubitGateKind::kSwap || *kind == QubitGateKind::kCswap ||
                               *kind == QubitGateKind::kCChi || *kind == QubitGateKind::kCChiInv)
                                  ? 2
                                  : 1;
        if (static_cast<int>(w.size()) < n_targets) e.fail("too few wires");
        g.controls.assign(w.begin(), w.end() - n_targets);
        g.targets.assign(w.end() - n_targets, w.end());
        g.polarity.assign(g.controls.size(), true);
        for (std::size_t k = 2; k < t.size(); ++k) {
            if (t[k].starts_with("@")) {
                g.angle = e.to_double(t[k].substr(1));
            } else if (t[k].starts_with("pol=")) {
                const std::string p = t[k].substr(4);
                if (p.size() != g.controls.size()) e.fail("polarity length must match controls");
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (p[i] != '0' && p[i] != '1') e.fail("polarity must be 0/1");
                    g.polarity[i] = p[i] == '1';
                }
            } else {
                e.fail("unexpected token '" + t[k] + "'");
            }
        }
        gates.emplace_back(number, std::move(g));
    });
    if (wires < 0) throw Error(ErrorCode::kParse, "missing 'wires' header");
    QubitCircuit c(wires, name);
    for (auto &[number, g] : gates) {
        try {
            c.add(std::move(g));
        } catch (const Error &err) {
            LineError{number}.fail(err.what());
        }
    }
    return c;
}

QuditCircuit qudit_circuit_from_text(std::string_view text) {
    int wires = -1, dim = -1;
    std::string name;
    std::vector<std::pair<int, QuditGate>> gates;
    for_each_line(text, [&](int number, const std::vector<std::string> &t) {
        const LineError e{number};
        if (t[0] == "wires" || t[0] == "dim") {
            if (t.size() != 2) e.fail("usage: " + t[0] + " N");
            (t[0] == "wires" ? wires : dim) = e.to_int(t[1]);
            return;
        }
        if (t[0] == "name") {
            if (t.size() != 2) e.fail("usage: name NAME");
            name = t[1];
            return;
        }
        const auto kind = qudit_kind_from_name(t[0]);
        if (!kind) e.fail("unknown qudit gate '" + t[0] + "'");
        if (t.size() < 2) e.fail("missing wire list");
        const std::vector<int> w = e.int_list(t[1]);
        QuditGate g;
        g.kind = *kind;
        if (*kind == QuditGateKind::kCSnap) {
            if (w.size() != 2) e.fail("CSNAP takes control,target");
            g.control_wire = w[0];
            g.wire = w[1];
        } else {
            if (w.size() != 1) e.fail("single-qudit gate takes one wire");
            g.wire = w[0];
        }
        std::optional<std::pair<int, int>> levels;
        for (std::size_t k = 2; k < t.size(); ++k) {
            const bool has_next = k + 1 < t.size();
            if (t[k].starts_with("@")) {
                g.angle = e.to_double(t[k].substr(1));
            } else if (t[k] == "levels" && has_next) {
                const auto l = e.int_list(t[++k]);
                if (l.size() != 2) e.fail("levels takes a,b");
                levels = {l[0], l[1]};
            } else if (t[k] == "level" && has_next) {
                g.control_level = e.to_int(t[++k]);
            } else if (t[k] == "phases" && has_next) {
                for (const auto &p : split(t[++k], ';')) g.phases.push_back(e.to_double(p));
            } else if (t[k] == "alpha" && has_next) {
                const auto parts = split(t[++k], ',');
                if (parts.size() != 2) e.fail("alpha takes re,im");
                g.alpha = {e.to_double(parts[0]), e.to_double(parts[1])};
            } else {
                e.fail("unexpected token '" + t[k] + "'");
            }
        }
        if (g.is_givens()) {
            if (!levels) e.fail("missing levels");
            g = QuditGate::givens(g.kind, g.wire, levels->first, levels->second, g.angle);
        }
        gates.emplace_back(number, std::move(g));
    });
    if (wires < 0 || dim < 0) throw Error(ErrorCode::kParse, "missing 'wires' or 'dim' header");
    QuditCircuit c(wires, dim, name);
    for (auto &[number, g] : gates) {
        try {
            c.add(std::move(g));
        } catch (const Error &err) {
            LineError{number}.fail(err.what());
        }
    }
    return c;
}

namespace {

template <class Circuit>
std::string count_csv(const Circuit &c) {
    std::vector<std::string> order;
    std::map<std::string, std::size_t> counts;
    for (const auto &g : c.gates()) {
        const std::string k(gate_name(g.kind));
        if (counts[k]++ == 0) order.push_back(k);
    }
    std::string out = "gate_kind,count\n";
    for (const auto &k : order) out += k + "," + std::to_string(counts[k]) + "\n";
    return out;
}

}  // namespace

std::string gate_count_csv(const QubitCircuit &c) { return count_csv(c); }
std::string gate_count_csv(const QuditCircuit &c) { return count_csv(c); }

}  // namespace btg
