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

// Placement and SWAP-insertion routing of lowered qubit circuits onto a
// coupling graph.

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "qubit_circuit.hpp"

namespace btg {

class CouplingGraph {
  public:
    /// Throws Error(kInvalidArgument) unless the graph is connected with distinct, in-range edges.
    CouplingGraph(int vertices, std::vector<std::pair<int, int>> edges);

    /// Seven-vertex heavy-hex fragment: 0-1, 1-2, 1-3, 3-5, 4-5, 5-6.
    static CouplingGraph nairobi();
    /// Text with an optional `vertices N` line and one `a b` edge per line.
    static CouplingGraph from_text(std::string_view text);

    int vertices() const noexcept { return vertices_; }
    const std::vector<std::pair<int, int>> &edges() const noexcept { return edges_; }
    bool adjacent(int a, int b) const;
    int distance(int a, int b) const;
    /// Vertices from a to b inclusive along a shortest path (lowest-index neighbours first).
    std::vector<int> shortest_path(int a, int b) const;

  private:
    int vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<int>> next_;
};

struct RoutedCircuit {
    /// Acts on graph.vertices() physical wires.
    QubitCircuit circuit;
    /// logical wire -> physical vertex, before and after.
    std::vector<int> initial;
    std::vector<int> final;
    std::size_t swaps = 0;
};

/// Every 2-qubit gate of `c` must already be CNOT or SWAP. A gate on
/// non-adjacent vertices moves its first wire along a shortest path with
/// SWAPs until adjacent; the moved qubit stays at its new position.
RoutedCircuit route(const QubitCircuit &c, const CouplingGraph &g, const std::vector<int> &placement);

/// Exhaustive search over injective placements for the fewest inserted
/// SWAPs; ties resolve to the lexicographically smallest placement.
RoutedCircuit route_best(const QubitCircuit &c, const CouplingGraph &g);

/// Max deviation between the routed unitary and the logical one once the
/// wire relabeling is undone, global phase quotiented out, with unused
/// physical wires starting in |0>.
double routing_equivalence_error(const QubitCircuit &logical, const RoutedCircuit &routed);

/// CNOT count after lowering the inserted SWAPs to three CNOTs each.
std::size_t routed_cnot_count(const RoutedCircuit &r);

}  // namespace btg
