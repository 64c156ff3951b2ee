#ifndef LAPMATCH_GRAPH_HPP
#define LAPMATCH_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lapmatch/errors.hpp"

namespace lapmatch {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction validates simplicity (no self-loops, no duplicate edges) and
/// the degree-sum identity. Vertex deletion returns a new Graph with the
/// remaining vertices relabeled densely, preserving relative order.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges normalized to u < v and sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    /// Minimum degree delta; 0 when some vertex is isolated.
    int min_degree() const;

    bool connected() const;

    /// Per-vertex neighbor bitmasks; only valid for n <= 64.
    const std::vector<std::uint64_t>& adjacency_masks() const;

    /// New graph with the vertices in `removed` deleted (duplicates allowed,
    /// out-of-range rejected); survivors relabeled to 0..n-|removed|-1 in order.
    Graph without_vertices(const std::vector<int>& removed) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_; // empty when n > 64
};

// ---- family generators ----

Graph make_complete_bipartite(int s, int t);

/// K_s joined to t isolated vertices: clique on {0..s-1}, every clique vertex
/// adjacent to every vertex of {s..s+t-1}.
Graph make_join_clique_independent(int s, int t);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int t); // center 0, t leaves

/// Deterministic G(n, p): edge included iff the next 32-bit draw of a
/// mersenne twister seeded with `seed`, mapped to [0,1), is below p.
/// Pairs are scanned in lexicographic order, so output is platform-stable.
Graph make_random(int n, double p, std::uint64_t seed);

/// Two 2-edge-connected blocks joined by a single bridge between block
/// vertex 0 of each side. Rejects blocks that are not 2-edge-connected.
Graph make_dumbbell(const Graph& left_block, const Graph& right_block);

enum class TightnessKind { bipartite, join };

/// Result of make_tightness_family with its construction parameters attached.
struct TightnessGraph {
    Graph graph;
    TightnessKind kind;
    int s = 0;
    int t = 0;
    double r = 0.0;
    double a = 0.0;
};

/// Builds the near-miss family for the matching bound: t = ceil(((1-r)/r)*s + a/r),
/// then K_{s,t} or K_s v tK_1 depending on `kind`. Requires 0 < r <= 1/2 and a > r.
TightnessGraph make_tightness_family(double r, int s, double a, TightnessKind kind);

// ---- external formats ----

/// Parses one short-form graph6 line (n <= 62). Errors carry byte offsets.
Graph parse_graph6(const std::string& text);

/// Short-form graph6 encoding; rejects n > 62.
std::string serialize_graph6(const Graph& g);

/// "n m" header then m lines "u v", 0-based. Self-loops and duplicates rejected.
Graph parse_edge_list(const std::string& text);

std::string serialize_edge_list(const Graph& g);

} // namespace lapmatch

#endif
