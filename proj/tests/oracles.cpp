#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lapmatch::testing {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

std::vector<double> closed_form_complete(int n) {
    std::vector<double> v(n, static_cast<double>(n));
    v[0] = 0.0;
    return v;
}

std::vector<double> closed_form_path(int n) {
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = 2.0 - 2.0 * std::cos(kPi * k / n);
    return sorted(std::move(v));
}

std::vector<double> closed_form_cycle(int n) {
    std::vector<double> v(n);
    for (int k = 0; k < n; ++k) v[k] = 2.0 - 2.0 * std::cos(2.0 * kPi * k / n);
    return sorted(std::move(v));
}

std::vector<double> closed_form_complete_bipartite(int s, int t) {
    std::vector<double> v;
    v.push_back(0.0);
    v.insert(v.end(), t - 1, static_cast<double>(s));
    v.insert(v.end(), s - 1, static_cast<double>(t));
    v.push_back(static_cast<double>(s + t));
    return sorted(std::move(v));
}

std::vector<double> closed_form_join(int s, int t) {
    std::vector<double> v;
    v.push_back(0.0);
    v.insert(v.end(), t - 1, static_cast<double>(s));
    v.insert(v.end(), s, static_cast<double>(s + t));
    return sorted(std::move(v));
}

int brute_matching_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("brute matching oracle supports n <= 24");
    const std::uint64_t states = std::uint64_t{1} << n;
    std::vector<std::int8_t> memo(states, -1);
    memo[0] = 0;
    // f(mask) = matching number of the induced subgraph on mask
    for (std::uint64_t mask = 1; mask < states; ++mask) {
        int low = 0;
        while (!(mask >> low & 1)) ++low;
        std::int8_t best = memo[mask & ~(std::uint64_t{1} << low)]; // skip vertex low
        for (int u : g.neighbors(low)) {
            if (!(mask >> u & 1)) continue;
            const std::uint64_t rest = mask & ~(std::uint64_t{1} << low) & ~(std::uint64_t{1} << u);
            best = std::max<std::int8_t>(best, static_cast<std::int8_t>(1 + memo[rest]));
        }
        memo[mask] = best;
    }
    return memo[states - 1];
}

bool brute_has_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    return n % 2 == 0 && brute_matching_number(g) * 2 == n;
}

bool brute_factor_critical(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 == 0) return false;
    if (n == 1) return true;
    for (int v = 0; v < n; ++v)
        if (!brute_has_perfect_matching(g.without_vertices({v}))) return false;
    return true;
}

int oracle_component_count(const Graph& g, const std::vector<int>& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0), seen(n, 0);
    for (int v : removed) gone[v] = 1;
    int count = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (gone[start] || seen[start]) continue;
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (gone[u] || seen[u]) continue;
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return count;
}

std::vector<std::pair<int, int>> oracle_bridges(const Graph& g) {
    std::vector<std::pair<int, int>> bridges;
    const int base = oracle_component_count(g);
    for (const auto& edge : g.edges()) {
        std::vector<std::pair<int, int>> kept;
        for (const auto& other : g.edges())
            if (other != edge) kept.push_back(other);
        const Graph without(g.vertex_count(), kept);
        if (oracle_component_count(without) > base) bridges.push_back(edge);
    }
    return bridges;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return Graph(static_cast<int>(vertices.size()), edges);
}

bool oracle_two_edge_connected(const Graph& g, const std::vector<int>& vertices) {
    const Graph sub = induced_subgraph(g, vertices);
    return oracle_component_count(sub) == 1 && oracle_bridges(sub).empty();
}

bool oracle_is_dumbbell(const Graph& g) {
    if (oracle_component_count(g) != 1) return false;
    const auto bridges = oracle_bridges(g);
    if (bridges.size() != 1) return false;
    const auto [u, v] = bridges[0];
    std::vector<std::pair<int, int>> kept;
    for (const auto& edge : g.edges())
        if (edge != bridges[0]) kept.push_back(edge);
    const Graph split(g.vertex_count(), kept);
    if (oracle_component_count(split) != 2) return false;

    // collect the two sides by flooding from the bridge endpoints
    const int n = g.vertex_count();
    std::vector<char> side_u(n, 0);
    std::vector<int> stack = {u};
    side_u[u] = 1;
    while (!stack.empty()) {
        const int w = stack.back();
        stack.pop_back();
        for (int x : split.neighbors(w)) {
            if (side_u[x]) continue;
            side_u[x] = 1;
            stack.push_back(x);
        }
    }
    std::vector<int> left, right;
    for (int w = 0; w < n; ++w) (side_u[w] ? left : right).push_back(w);
    if (left.size() < 3 || right.size() < 3) return false;
    return oracle_two_edge_connected(g, left) && oracle_two_edge_connected(g, right);
}

Graph random_connected_graph(int n, double p, std::uint64_t& seed) {
    for (;;) {
        Graph g = make_random(n, p, seed++);
        if (g.connected()) return g;
    }
}

} // namespace lapmatch::testing
