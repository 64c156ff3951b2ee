#ifndef LAPMATCH_ENUMERATE_HPP
#define LAPMATCH_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "lapmatch/graph.hpp"

namespace lapmatch {

/// Compact encoding of a graph on n <= 11 vertices: bit j(j-1)/2 + i set
/// iff edge (i,j) present, for i < j.
std::uint64_t graph_code(const Graph& g);
Graph code_to_graph(std::uint64_t code, int n);

/// Canonical form: the maximum graph_code over all vertex orderings,
/// computed by color refinement plus individualization with twin pruning.
/// Two graphs on n vertices are isomorphic iff their canonical codes match.
std::uint64_t canonical_code(const Graph& g);

/// All non-isomorphic graphs on n vertices (n <= 11 in principle; intended
/// desk range n <= 9), as canonical codes in increasing order. Built level by
/// level: every graph on k vertices is some graph on k-1 vertices plus one
/// vertex attached to a neighbor subset, deduplicated by canonical code.
/// jobs == 1 runs the serial reference path; any other value uses the
/// OpenMP kernel. Both orders of evaluation produce identical output.
std::vector<std::uint64_t> enumerate_codes(int n, bool connected_only, int jobs = 1);

/// Convenience wrapper materializing Graph objects; fine for n <= 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs = 1);

} // namespace lapmatch

#endif
