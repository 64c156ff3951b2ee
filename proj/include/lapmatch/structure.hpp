#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lapmatch/graph.hpp"

namespace lapmatch {

struct ComponentReport {
    std::vector<std::vector<int>> components; // sorted internally, ordered by smallest vertex
    int odd_count = 0;
    int total = 0;
};

// Connected components of g minus the removed vertices.
ComponentReport components(const Graph& g, const std::vector<int>& removed = {});

// (odd component count, total component count) of g minus the masked
// vertices. Allocation-free core for subset scans; requires n <= 64.
std::pair<int, int> component_parity_counts(const Graph& g, std::uint64_t removed_mask);

struct BridgeReport {
    std::vector<std::pair<int, int>> bridges;          // sorted
    std::vector<std::vector<int>> two_edge_components; // components after bridge removal
};

BridgeReport bridges_and_2ecc(const Graph& g);

struct BalloonReport {
    std::vector<std::vector<int>> balloons;       // maximal 2-edge-connected parts on one bridge
    std::vector<std::pair<int, int>> bridge_of;   // the unique incident bridge, per balloon
    int count = 0;
    bool is_dumbbell = false;
};

// Requires a connected graph.
BalloonReport balloons(const Graph& g);

struct QReport {
    int q_count = 0; // components with an odd number of edges into the removed set
    std::vector<std::pair<std::vector<int>, int>> per_component_boundary;
};

QReport q_components(const Graph& g, const std::vector<int>& removed);

// A spanning subgraph is even when every vertex has positive even degree in
// it. Two independent deciders:
//   - edge search: backtracking over edge subsets, feasible for small m;
//   - counting condition: an even spanning subgraph exists iff every vertex
//     subset S satisfies q(G-S) <= sum over S of (deg(v) - 2).
// Each returns the witness its method produces.

// nullopt when no even spanning subgraph exists. Throws when m exceeds the cap.
std::optional<std::vector<std::pair<int, int>>> even_subgraph_edge_search(const Graph& g,
                                                                          int edge_cap = 24);

// A subset violating the counting condition, or nullopt when the condition
// holds everywhere (a subgraph exists). Throws when n exceeds the cap.
std::optional<std::vector<int>> even_subgraph_violating_set(const Graph& g, int vertex_cap = 16);

struct EvenSubgraphCaps {
    int edge_limit = 24;
    int vertex_limit = 16;
};

struct EvenSubgraphResult {
    bool exists = false;
    std::optional<std::vector<std::pair<int, int>>> subgraph; // witness when exists
    std::optional<std::vector<int>> refuting_set;             // witness when not
};

// Runs every method the caps allow and checks they agree; refuses when
// neither fits.
EvenSubgraphResult has_even_spanning_subgraph(const Graph& g, const EvenSubgraphCaps& caps = {});

struct SpanningTreeResult {
    bool exists = false;
    std::optional<std::vector<std::pair<int, int>>> tree; // witness when exists
    // A set S with c(G-S) > (k-2)|S| + 2, searched for on failure. The
    // counting condition is sufficient but not necessary, so this can be
    // absent even when no tree exists.
    std::optional<std::vector<int>> violating_set;
};

// Spanning tree with maximum degree at most k, by exact backtracking.
// Requires a connected graph, k >= 2 and n within the cap.
SpanningTreeResult bounded_degree_spanning_tree(const Graph& g, int k, int vertex_cap = 16);

} // namespace lapmatch
