#include "lapmatch/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "lapmatch/errors.hpp"

namespace lapmatch {

ComponentReport components(const Graph& g, const std::vector<int>& removed) {
    int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : removed) {
        if (v < 0 || v >= n) throw precondition_error("removed set contains an out-of-range vertex");
        gone[v] = 1;
    }

    ComponentReport out;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (gone[start] || seen[start]) continue;
        std::vector<int> comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (gone[u] || seen[u]) continue;
                seen[u] = 1;
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        if (comp.size() % 2 == 1) ++out.odd_count;
        out.components.push_back(std::move(comp));
    }
    out.total = static_cast<int>(out.components.size());
    return out;
}

std::pair<int, int> component_parity_counts(const Graph& g, std::uint64_t removed_mask) {
    const std::vector<std::uint64_t>& adj = g.adjacency_masks();
    std::uint64_t remaining = (g.vertex_count() == 64 ? ~std::uint64_t{0}
                                                      : (std::uint64_t{1} << g.vertex_count()) - 1) &
                              ~removed_mask;
    int odd = 0, total = 0;
    while (remaining) {
        std::uint64_t comp = std::uint64_t{1} << std::countr_zero(remaining);
        for (;;) {
            std::uint64_t grown = comp;
            std::uint64_t work = comp;
            while (work) {
                int v = std::countr_zero(work);
                work &= work - 1;
                grown |= adj[v] & remaining;
            }
            if (grown == comp) break;
            comp = grown;
        }
        ++total;
        if (std::popcount(comp) % 2 == 1) ++odd;
        remaining &= ~comp;
    }
    return {odd, total};
}

namespace {

// Iterative DFS low-link bridge finder.
std::vector<std::pair<int, int>> find_bridges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> bridges;
    int timer = 0;

    struct Frame {
        int v;
        int parent; // -1 once the single tree edge back up has been skipped
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const std::vector<int>& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int u = nb[f.next++];
                if (u == f.parent) {
                    f.parent = -1;
                    continue;
                }
                if (disc[u] == -1) {
                    disc[u] = low[u] = timer++;
                    stack.push_back({u, f.v, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[u]);
                }
            } else {
                int v = f.v;
                stack.pop_back();
                if (!stack.empty()) {
                    int parent = stack.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] > disc[parent])
                        bridges.emplace_back(std::min(parent, v), std::max(parent, v));
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

} // namespace

BridgeReport bridges_and_2ecc(const Graph& g) {
    BridgeReport out;
    out.bridges = find_bridges(g);

    int n = g.vertex_count();
    auto is_bridge = [&](int u, int v) {
        auto e = std::minmax(u, v);
        return std::binary_search(out.bridges.begin(), out.bridges.end(),
                                  std::pair<int, int>(e.first, e.second));
    };
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (seen[u] || is_bridge(v, u)) continue;
                seen[u] = 1;
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.two_edge_components.push_back(std::move(comp));
    }
    return out;
}

BalloonReport balloons(const Graph& g) {
    if (!g.connected()) throw precondition_error("balloon analysis requires a connected graph");

    BridgeReport br = bridges_and_2ecc(g);
    int n = g.vertex_count();
    std::vector<int> block_of(n, -1);
    for (std::size_t b = 0; b < br.two_edge_components.size(); ++b)
        for (int v : br.two_edge_components[b]) block_of[v] = static_cast<int>(b);

    BalloonReport out;
    for (std::size_t b = 0; b < br.two_edge_components.size(); ++b) {
        const std::vector<int>& comp = br.two_edge_components[b];
        if (comp.size() < 3) continue; // single vertices are not 2-edge-connected subgraphs
        std::vector<std::pair<int, int>> incident;
        for (auto [u, v] : br.bridges)
            if (block_of[u] == static_cast<int>(b) || block_of[v] == static_cast<int>(b))
                incident.emplace_back(u, v);
        if (incident.size() != 1) continue;
        out.balloons.push_back(comp);
        out.bridge_of.push_back(incident.front());
    }
    out.count = static_cast<int>(out.balloons.size());
    out.is_dumbbell = out.count == 2 &&
                      out.balloons[0].size() + out.balloons[1].size() == static_cast<std::size_t>(n) &&
                      out.bridge_of[0] == out.bridge_of[1];
    return out;
}

QReport q_components(const Graph& g, const std::vector<int>& removed) {
    ComponentReport comps = components(g, removed);
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : removed) in_s[v] = 1;

    QReport out;
    for (std::vector<int>& comp : comps.components) {
        int boundary = 0;
        for (int v : comp)
            for (int u : g.neighbors(v))
                if (in_s[u]) ++boundary;
        if (boundary % 2 == 1) ++out.q_count;
        out.per_component_boundary.emplace_back(std::move(comp), boundary);
    }
    return out;
}

std::optional<std::vector<std::pair<int, int>>> even_subgraph_edge_search(const Graph& g,
                                                                          int edge_cap) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (m > edge_cap) throw precondition_error("edge search cap exceeded");
    if (m > 62) throw precondition_error("edge search limited to m <= 62");
    // A vertex with fewer than two incident edges can never reach positive even degree.
    if (g.min_degree() < 2) return std::nullopt;

    // Every edge set with all degrees even is a sum of fundamental cycles of a
    // spanning forest, so it suffices to scan that space for a member touching
    // every vertex: touched vertices then have degree both positive and even.
    const std::vector<std::pair<int, int>>& edges = g.edges();
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0), order;
    std::vector<char> seen(n, 0);
    std::vector<char> in_tree(m, 0);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        order.push_back(root);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            int v = order[head];
            for (int u : g.neighbors(v)) {
                if (seen[u]) continue;
                seen[u] = 1;
                depth[u] = depth[v] + 1;
                parent[u] = v;
                order.push_back(u);
            }
        }
    }
    auto edge_index = [&](int u, int v) {
        auto e = std::minmax(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::pair<int, int>(e.first, e.second));
        return static_cast<int>(it - edges.begin());
    };
    for (int v = 0; v < n; ++v)
        if (parent[v] != -1) {
            parent_edge[v] = edge_index(v, parent[v]);
            in_tree[parent_edge[v]] = 1;
        }

    std::vector<std::uint64_t> vertex_pair(m);
    for (int e = 0; e < m; ++e)
        vertex_pair[e] = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);

    std::vector<std::uint64_t> basis; // one edge mask per non-tree edge
    for (int e = 0; e < m; ++e) {
        if (in_tree[e]) continue;
        std::uint64_t cycle = std::uint64_t{1} << e;
        int a = edges[e].first, b = edges[e].second;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            cycle ^= std::uint64_t{1} << parent_edge[a];
            a = parent[a];
        }
        basis.push_back(cycle);
    }

    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto touches_all = [&](std::uint64_t picked) {
        std::uint64_t support = 0;
        while (picked) {
            support |= vertex_pair[std::countr_zero(picked)];
            picked &= picked - 1;
        }
        return support == full;
    };

    int dim = static_cast<int>(basis.size());
    std::uint64_t current = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << dim); ++k) {
        current ^= basis[std::countr_zero(k)]; // Gray-code walk of the whole space
        if (touches_all(current)) {
            std::vector<std::pair<int, int>> picked;
            for (int e = 0; e < m; ++e)
                if (current >> e & 1) picked.push_back(edges[e]);
            return picked;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> even_subgraph_violating_set(const Graph& g, int vertex_cap) {
    int n = g.vertex_count();
    if (n > vertex_cap) throw precondition_error("vertex subset cap exceeded");
    if (n > 63) throw precondition_error("vertex subset scan limited to n <= 63");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        int slack = 0;
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) {
                slack += g.degree(v) - 2;
                set.push_back(v);
            }
        QReport q = q_components(g, set);
        if (q.q_count > slack) return set;
    }
    return std::nullopt;
}

EvenSubgraphResult has_even_spanning_subgraph(const Graph& g, const EvenSubgraphCaps& caps) {
    bool edge_ok = g.edge_count() <= caps.edge_limit && g.edge_count() <= 62;
    bool subset_ok = g.vertex_count() <= caps.vertex_limit && g.vertex_count() <= 63;
    if (!edge_ok && !subset_ok) throw precondition_error("graph exceeds both even-subgraph caps");

    EvenSubgraphResult out;
    std::optional<bool> edge_verdict, subset_verdict;
    if (edge_ok) {
        out.subgraph = even_subgraph_edge_search(g, caps.edge_limit);
        edge_verdict = out.subgraph.has_value();
    }
    if (subset_ok) {
        out.refuting_set = even_subgraph_violating_set(g, caps.vertex_limit);
        subset_verdict = !out.refuting_set.has_value();
    }
    if (edge_verdict && subset_verdict && *edge_verdict != *subset_verdict)
        throw std::logic_error("even-subgraph methods disagree");
    out.exists = edge_verdict ? *edge_verdict : *subset_verdict;
    if (out.exists)
        out.refuting_set.reset();
    else
        out.subgraph.reset();
    return out;
}

namespace {

// Take-or-skip backtracking over edges with union-find rollback (no path
// compression, so a single parent reset undoes a union). Edges touching
// low-degree vertices come first so forced failures surface early.
struct TreeSearch {
    int k = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> parent, degree;
    int comps = 0;

    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }

    bool search(std::size_t idx, std::vector<char>& take) {
        if (comps == 1) return true;
        if (idx == edges.size()) return false;
        if (static_cast<std::size_t>(comps - 1) > edges.size() - idx) return false;

        auto [u, v] = edges[idx];
        if (degree[u] < k && degree[v] < k) {
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[rv] = ru;
                --comps;
                ++degree[u];
                ++degree[v];
                take[idx] = 1;
                if (search(idx + 1, take)) return true;
                take[idx] = 0;
                --degree[u];
                --degree[v];
                parent[rv] = rv;
                ++comps;
            }
        }
        return search(idx + 1, take);
    }
};

} // namespace

SpanningTreeResult bounded_degree_spanning_tree(const Graph& g, int k, int vertex_cap) {
    if (k < 2) throw precondition_error("degree bound must be at least 2");
    if (!g.connected()) throw precondition_error("spanning tree search requires a connected graph");
    int n = g.vertex_count();
    if (n > vertex_cap) throw precondition_error("spanning tree search cap exceeded");

    SpanningTreeResult out;
    if (n == 1) {
        out.exists = true;
        out.tree = std::vector<std::pair<int, int>>{};
        return out;
    }

    TreeSearch s;
    s.k = k;
    s.edges = g.edges();
    std::stable_sort(s.edges.begin(), s.edges.end(), [&](const auto& a, const auto& b) {
        int pa = std::min(g.degree(a.first), g.degree(a.second));
        int pb = std::min(g.degree(b.first), g.degree(b.second));
        return pa < pb;
    });
    s.parent.resize(n);
    std::iota(s.parent.begin(), s.parent.end(), 0);
    s.degree.assign(n, 0);
    s.comps = n;

    std::vector<char> take(s.edges.size(), 0);
    if (s.search(0, take)) {
        out.exists = true;
        std::vector<std::pair<int, int>> tree;
        for (std::size_t i = 0; i < s.edges.size(); ++i)
            if (take[i]) tree.push_back(s.edges[i]);
        std::sort(tree.begin(), tree.end());
        out.tree = std::move(tree);
        return out;
    }

    out.exists = false;
    if (n <= 63) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> set;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) set.push_back(v);
            int c = components(g, set).total;
            if (c > (k - 2) * static_cast<int>(set.size()) + 2) {
                out.violating_set = std::move(set);
                break;
            }
        }
    }
    return out;
}

} // namespace lapmatch
