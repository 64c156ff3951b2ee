// Reference implementations that reach expected values through a different
// route than the library: closed-form spectra, bitmask-DP matchings, and
// edge-deletion bridge finding. Deliberately simple and slow.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lapmatch/graph.hpp"

namespace lapmatch::testing {

std::vector<double> closed_form_complete(int n);
std::vector<double> closed_form_path(int n);
std::vector<double> closed_form_cycle(int n);
std::vector<double> closed_form_complete_bipartite(int s, int t);
std::vector<double> closed_form_join(int s, int t);

// Maximum matching size by DP over vertex subsets; n <= 24.
int brute_matching_number(const Graph& g);
bool brute_has_perfect_matching(const Graph& g);
bool brute_factor_critical(const Graph& g);

// Component count of g with the listed vertices removed; BFS from scratch.
int oracle_component_count(const Graph& g, const std::vector<int>& removed = {});

// An edge is a bridge iff deleting it splits its component.
std::vector<std::pair<int, int>> oracle_bridges(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Definitional: the induced subgraph is connected and bridgeless.
bool oracle_two_edge_connected(const Graph& g, const std::vector<int>& vertices);

// Definitional dumbbell test: exactly one bridge, whose removal leaves two
// bridgeless connected parts of at least three vertices each.
bool oracle_is_dumbbell(const Graph& g);

// Draws from make_random, advancing seed until the result is connected.
Graph random_connected_graph(int n, double p, std::uint64_t& seed);

} // namespace lapmatch::testing
