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

#include "routing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "lowering.hpp"

namespace btg {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max();

}  // namespace

CouplingGraph::CouplingGraph(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
    if (vertices < 1) throw Error(ErrorCode::kInvalidArgument, "coupling graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
    for (auto [a, b] : edges_) {
        if (a < 0 || b < 0 || a >= vertices || b >= vertices || a == b)
            throw Error(ErrorCode::kInvalidArgument, "coupling graph edge out of range");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw Error(ErrorCode::kInvalidArgument, "duplicate coupling graph edge");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto &n : adj) std::sort(n.begin(), n.end());
    const auto nv = static_cast<std::size_t>(vertices);
    dist_.assign(nv, std::vector<int>(nv, kUnreachable));
    next_.assign(nv, std::vector<int>(nv, -1));
    // BFS from each target t; next_[v][t] is the first step from v towards t.
    for (std::size_t t = 0; t < nv; ++t) {
        std::queue<int> q;
        dist_[t][t] = 0;
        q.push(static_cast<int>(t));
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                auto &d = dist_[static_cast<std::size_t>(w)][t];
                if (d == kUnreachable) {
                    d = dist_[static_cast<std::size_t>(v)][t] + 1;
                    q.push(w);
                }
            }
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (dist_[v][t] == kUnreachable) throw Error(ErrorCode::kInvalidArgument, "coupling graph is not connected");
            for (int w : adj[v])
                if (dist_[static_cast<std::size_t>(w)][t] == dist_[v][t] - 1) {
                    next_[v][t] = w;
                    break;
                }
        }
    }
}

CouplingGraph CouplingGraph::nairobi() { return CouplingGraph(7, {{0, 1}, {1, 2}, {1, 3}, {3, 5}, {4, 5}, {5, 6}}); }

CouplingGraph CouplingGraph::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "vertices") {
            if (!(ls >> vertices)) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": vertices N");
            continue;
        }
        std::istringstream fs(first);
        int a = 0, b = 0;
        if (!(fs >> a) || !(ls >> b)) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": expected 'a b'");
        edges.emplace_back(a, b);
        vertices = std::max({vertices, a + 1, b + 1});
    }
    return CouplingGraph(vertices, std::move(edges));
}

bool CouplingGraph::adjacent(int a, int b) const { return distance(a, b) == 1; }

int CouplingGraph::distance(int a, int b) const {
    return dist_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
}

std::vector<int> CouplingGraph::shortest_path(int a, int b) const {
    std::vector<int> path{a};
    while (path.back() != b) path.push_back(next_[static_cast<std::size_t>(path.back())][static_cast<std::size_t>(b)]);
    return path;
}

RoutedCircuit route(const QubitCircuit &c, const CouplingGraph &g, const std::vector<int> &placement) {
    const int n = c.wires();
    if (n > g.vertices()) throw Error(ErrorCode::kInvalidArgument, "coupling graph has fewer vertices than circuit wires");
    if (static_cast<int>(placement.size()) != n) throw Error(ErrorCode::kInvalidArgument, "placement size must equal wire count");
    std::vector<int> owner(static_cast<std::size_t>(g.vertices()), -1);  // vertex -> logical
    for (int w = 0; w < n; ++w) {
        const int v = placement[static_cast<std::size_t>(w)];
        if (v < 0 || v >= g.vertices() || owner[static_cast<std::size_t>(v)] != -1)
            throw Error(ErrorCode::kInvalidArgument, "placement is not injective into the graph");
        owner[static_cast<std::size_t>(v)] = w;
    }
    RoutedCircuit r{QubitCircuit(g.vertices(), c.name()), placement, placement, 0};
    r.circuit.set_source(c.source());
    auto &pos = r.final;
    auto physical = [&](QubitGate gate) {
        for (int &w : gate.controls) w = pos[static_cast<std::size_t>(w)];
        for (int &w : gate.targets) w = pos[static_cast<std::size_t>(w)];
        return gate;
    };
    for (const QubitGate &gate : c.gates()) {
        const auto wires = gate.wires();
        if (wires.size() > 2) throw Error(ErrorCode::kUnsupported, "routing needs a circuit lowered to 1- and 2-qubit gates");
        if (wires.size() == 2) {
            const int a = wires[0], b = wires[1];
            const auto path = g.shortest_path(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
            for (std::size_t k = 0; k + 2 < path.size(); ++k) {
                const int u = path[k], v = path[k + 1];
                r.circuit.add(QubitGate::swap(u, v));
                ++r.swaps;
                const int lu = owner[static_cast<std::size_t>(u)], lv = owner[static_cast<std::size_t>(v)];
                std::swap(owner[static_cast<std::size_t>(u)], owner[static_cast<std::size_t>(v)]);
                if (lu >= 0) pos[static_cast<std::size_t>(lu)] = v;
                if (lv >= 0) pos[static_cast<std::size_t>(lv)] = u;
            }
        }
        r.circuit.add(physical(gate));
    }
    return r;
}

RoutedCircuit route_best(const QubitCircuit &c, const CouplingGraph &g) {
    const int n = c.wires(), nv = g.vertices();
    if (n > nv) throw Error(ErrorCode::kInvalidArgument, "coupling graph has fewer vertices than circuit wires");
    std::vector<int> vertices(static_cast<std::size_t>(nv));
    std::iota(vertices.begin(), vertices.end(), 0);
    std::optional<RoutedCircuit> best;
    std::set<std::vector<int>> tried;
    do {
        std::vector<int> placement(vertices.begin(), vertices.begin() + n);
        if (!tried.insert(placement).second) continue;
        RoutedCircuit r = route(c, g, placement);
        if (!best || r.swaps < best->swaps) best = std::move(r);
    } while (std::next_permutation(vertices.begin(), vertices.end()));
    return *best;
}

double routing_equivalence_error(const QubitCircuit &logical, const RoutedCircuit &routed) {
    const int n = logical.wires();
    const CMatrix ul = unitary_of(logical);
    const std::size_t dim = std::size_t{1} << n;
    auto embed = [&](std::size_t x, const std::vector<int> &map) {
        std::size_t y = 0;
        for (int w = 0; w < n; ++w)
            if ((x >> w) & 1U) y |= std::size_t{1} << map[static_cast<std::size_t>(w)];
        return static_cast<int>(y);
    };
    std::vector<int> inputs(dim);
    for (std::size_t x = 0; x < dim; ++x) inputs[x] = embed(x, routed.initial);
    const CMatrix cols = columns_of(routed.circuit, inputs);
    CMatrix expected = CMatrix::Zero(cols.rows(), cols.cols());
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            expected(embed(y, routed.final), static_cast<Eigen::Index>(x)) = ul(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
    return phase_distance(cols, expected);
}

std::size_t routed_cnot_count(const RoutedCircuit &r) {
    return r.circuit.count(QubitGateKind::kCnot) + 3 * r.circuit.count(QubitGateKind::kSwap);
}

}  // namespace btg
