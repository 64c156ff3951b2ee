#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lapmatch/graph.hpp"

namespace lapmatch {

struct MatchingCertificate {
    std::vector<std::pair<int, int>> matching; // vertex-disjoint edges, sorted
    int size = 0;
    // Set minimizing |S| - o(G-S); extracted from the alternating forests as
    // the neighborhood of the vertices some maximum matching misses.
    std::vector<int> witness_s;
    int deficiency = 0; // n - 2 size = o(G - witness_s) - |witness_s|
};

// Maximum matching by blossom augmentation. The returned witness certifies
// maximality through the deficiency identity, which is re-checked internally.
MatchingCertificate maximum_matching(const Graph& g);

struct SubsetMinimizer {
    std::vector<int> set; // sorted
    int value = 0;        // |S| - o(G-S)
};

// Exact minimizer of |S| - o(G-S) over all vertex subsets. Ties break toward
// smaller |S|, then lexicographically smaller vertex list. jobs == 1 runs the
// serial reference scan; other values use the parallel kernel with identical
// results.
SubsetMinimizer berge_tutte_min_exhaustive(const Graph& g, int cap = 16, int jobs = 1);

bool has_perfect_matching(const Graph& g);

struct FactorCriticalVerdict {
    bool is_factor_critical = false;
    std::optional<int> failing_vertex;              // v with no perfect matching in G-v
    std::optional<std::vector<int>> gallai_witness; // nonempty S with o(G-S) > |S|
};

// Deletes each vertex in turn and tests for a perfect matching. For n <= 16
// the subset characterization (n odd and o(G-S) <= |S| for every nonempty S)
// is evaluated as well and any disagreement throws.
FactorCriticalVerdict factor_critical(const Graph& g);

} // namespace lapmatch
