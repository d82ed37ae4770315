// Copyright 2026 The kuniform Authors
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

#ifndef KUNIFORM_GRAPH_H
#define KUNIFORM_GRAPH_H

#include <cstdint>
#include <string>
#include <vector>

#include "kuniform/combinatorics.h"
#include "kuniform/pure_state.h"

namespace kuniform {

/// Edge between A-vertex `a` (kept word) and B-vertex `b` (dropped word).
/// Vertex indices read the word as base-d digits, first column most
/// significant.
struct Edge {
    uint64_t a;
    uint64_t b;
    Phase phase;
};

/// Bipartite graph of a state for one bipartition: d^k vertices on side A,
/// d^(N-k) on side B, one edge per term.
struct BipartiteGraph {
    size_t qudits;
    uint32_t levels;
    ColumnSet keep;
    ColumnSet drop;
    std::vector<Edge> edges;

    uint64_t size_a() const;
    uint64_t size_b() const;
    std::string label_a(uint64_t v) const;
    std::string label_b(uint64_t v) const;
};

/// Throws Error(kBadSubset) unless keep is a strictly increasing nonempty
/// proper subset of the qudits.
BipartiteGraph graph_from_state(const PureState &state, const ColumnSet &keep);

struct RuleCheck {
    /// Every B-vertex has degree at most one.
    bool diagonality;
    /// Every A-vertex has the same degree.
    bool uniformity;
};

RuleCheck check_rules(const BipartiteGraph &g);

/// Both rules on every k-subset. Only meaningful when all phases are equal;
/// throws Error(kPhasesPresent) otherwise.
bool is_k_uniform_by_graphs(const PureState &state, size_t k);

/// True iff the sorted edge lists agree on every k-subset partition.
/// Throws Error(kPhasesPresent) for states with unequal phases.
bool graphs_identical(const PureState &state, size_t k);

/// d^k x d^(N-k) 0/1 matrix, row-major.
struct AdjacencyMatrix {
    uint64_t rows;
    uint64_t cols;
    std::vector<uint8_t> cells;
};

/// Throws Error(kReductionTooLarge) if d^N exceeds 2^24.
AdjacencyMatrix adjacency(const BipartiteGraph &g);

/// One +1 term per set entry; the row label fills the kept columns and the
/// column label the others.
PureState state_from_adjacency(const AdjacencyMatrix &m, size_t qudits, uint32_t levels, const ColumnSet &keep);

/// Heuristic flags read off degree patterns. These are hints, not an
/// entanglement classification.
struct GraphAdvisory {
    bool diagonal;
    bool uniform;
    /// Edges form exactly (A-subset) x (B-subset), so the equal-phase state
    /// factorizes across this bipartition.
    bool product_across_partition;
};

GraphAdvisory advise(const BipartiteGraph &g);

struct StateAdvisory {
    /// Qudits that split off as a product factor (0-based).
    std::vector<size_t> product_qudits;
    bool fully_separable_hint;
    /// Largest k <= N/2 passing both graph rules on every k-subset.
    size_t graph_uniformity;
};

/// Requires equal phases (Error(kPhasesPresent)).
StateAdvisory advise(const PureState &state);

/// Graphviz text with the A and B sides as two ranked clusters.
std::string to_dot(const BipartiteGraph &g);

/// {"n", "d", "k", "partition": {"keep", "drop"}, "vertices_a", "vertices_b",
///  "edges": [[a_label, b_label, [re, im]], ...]}
std::string to_json(const BipartiteGraph &g);

/// Inverse of to_json. Throws ParseError on malformed input.
BipartiteGraph graph_from_json(const std::string &text);

}  // namespace kuniform

#endif
