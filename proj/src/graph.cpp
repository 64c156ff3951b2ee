#include "lapmatch/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace lapmatch {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
    if (n < 1) throw precondition_error("graph needs at least one vertex, got n=" + std::to_string(n));
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    for (std::size_t i = 1; i < edge_list.size(); ++i)
        if (edge_list[i] == edge_list[i - 1])
            throw precondition_error("duplicate edge (" + std::to_string(edge_list[i].first) + "," + std::to_string(edge_list[i].second) + ")");
    edges_ = std::move(edge_list);

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    std::size_t degree_sum = 0;
    for (const auto& nb : adj_) degree_sum += nb.size();
    if (degree_sum != 2 * edges_.size())
        throw std::logic_error("degree-sum identity violated during construction");

    if (n_ <= 64) {
        masks_.assign(n_, 0);
        for (auto [u, v] : edges_) {
            masks_[u] |= std::uint64_t{1} << v;
            masks_[v] |= std::uint64_t{1} << u;
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = n_; // exceeds any degree
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::connected() const {
    std::vector<int> stack{0};
    std::vector<char> seen(n_, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

const std::vector<std::uint64_t>& Graph::adjacency_masks() const {
    if (n_ > 64) throw precondition_error("adjacency masks only available for n <= 64");
    return masks_;
}

Graph Graph::without_vertices(const std::vector<int>& removed) const {
    std::vector<char> gone(n_, 0);
    for (int v : removed) {
        if (v < 0 || v >= n_) throw precondition_error("removed vertex out of range: " + std::to_string(v));
        gone[v] = 1;
    }
    std::vector<int> relabel(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v)
        if (!gone[v]) relabel[v] = next++;
    if (next == 0) throw precondition_error("vertex deletion would leave an empty vertex set");
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : edges_)
        if (!gone[u] && !gone[v]) kept.emplace_back(relabel[u], relabel[v]);
    return Graph(next, std::move(kept));
}

// ---- generators ----

Graph make_complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw precondition_error("complete bipartite parts must be positive");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(s) * t);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return Graph(s + t, std::move(edges));
}

Graph make_join_clique_independent(int s, int t) {
    if (s < 1 || t < 1) throw precondition_error("join parts must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) edges.emplace_back(i, s + j);
    return Graph(s + t, std::move(edges));
}

Graph make_path(int n) {
    if (n < 1) throw precondition_error("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw precondition_error("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw precondition_error("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_star(int t) {
    if (t < 1) throw precondition_error("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= t; ++i) edges.emplace_back(0, i);
    return Graph(t + 1, std::move(edges));
}

Graph make_random(int n, double p, std::uint64_t seed) {
    if (n < 1) throw precondition_error("random graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw precondition_error("edge probability must be in [0,1]");
    std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // raw 32-bit draw instead of std::uniform_real_distribution,
            // whose output is implementation-defined
            double u = rng() * (1.0 / 4294967296.0);
            if (u < p) edges.emplace_back(i, j);
        }
    return Graph(n, std::move(edges));
}

namespace {

bool two_edge_connected(const Graph& g) {
    // n >= 3, connected, and no edge whose removal disconnects the graph
    if (g.vertex_count() < 3 || !g.connected()) return false;
    for (auto [u, v] : g.edges()) {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{u};
        seen[u] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if ((x == u && y == v) || (x == v && y == u)) continue;
                if (!seen[y]) {
                    seen[y] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        if (count != g.vertex_count()) return false;
    }
    return true;
}

} // namespace

Graph make_dumbbell(const Graph& left_block, const Graph& right_block) {
    if (!two_edge_connected(left_block))
        throw precondition_error("left block of a dumbbell must be 2-edge-connected");
    if (!two_edge_connected(right_block))
        throw precondition_error("right block of a dumbbell must be 2-edge-connected");
    int nl = left_block.vertex_count();
    std::vector<std::pair<int, int>> edges = left_block.edges();
    for (auto [u, v] : right_block.edges()) edges.emplace_back(nl + u, nl + v);
    edges.emplace_back(0, nl); // the bridge
    return Graph(nl + right_block.vertex_count(), std::move(edges));
}

TightnessGraph make_tightness_family(double r, int s, double a, TightnessKind kind) {
    if (!(r > 0.0 && r <= 0.5)) throw precondition_error("tightness family needs r in (0, 1/2]");
    if (!(a > r)) throw precondition_error("tightness family needs a > r");
    if (s < 1) throw precondition_error("tightness family needs s >= 1");
    int t = static_cast<int>(std::ceil(((1.0 - r) / r) * s + a / r));
    if (t <= s) throw std::logic_error("tightness family produced t <= s");
    TightnessGraph out{kind == TightnessKind::bipartite ? make_complete_bipartite(s, t)
                                                        : make_join_clique_independent(s, t),
                       kind, s, t, r, a};
    return out;
}

// ---- graph6 ----

Graph parse_graph6(const std::string& text) {
    // strip one trailing newline, if present
    std::string line = text;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty()) throw parse_error("empty graph6 input", 0);

    unsigned char header = static_cast<unsigned char>(line[0]);
    if (header == 126) throw parse_error("long-form graph6 size header not supported (n > 62)", 0);
    if (header < 63 || header > 125) throw parse_error("invalid graph6 size byte", 0);
    int n = header - 63;
    if (n < 1) throw parse_error("graph6 size must be at least 1", 0);

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() < 1 + nbytes) throw parse_error("graph6 line truncated", line.size());
    if (line.size() > 1 + nbytes) throw parse_error("trailing garbage after graph6 payload", 1 + nbytes);

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        unsigned char c = static_cast<unsigned char>(line[1 + b]);
        if (c < 63 || c > 126) throw parse_error("graph6 payload byte out of range", 1 + b);
        int val = c - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            if (bit >= nbits) {
                if ((val >> k) & 1) throw parse_error("nonzero padding bit in graph6 payload", 1 + b);
                continue;
            }
            if ((val >> k) & 1) {
                // bits run over column j = 1..n-1, row i = 0..j-1
                std::size_t idx = bit;
                int j = 1;
                while (idx >= static_cast<std::size_t>(j)) {
                    idx -= j;
                    ++j;
                }
                edges.emplace_back(static_cast<int>(idx), j);
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 62) throw precondition_error("graph6 short form limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    std::vector<int> bits(nbytes * 6, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) bits[bit] = 1;
    for (std::size_t b = 0; b < nbytes; ++b) {
        int val = 0;
        for (int k = 0; k < 6; ++k) val = (val << 1) | bits[b * 6 + k];
        out.push_back(static_cast<char>(63 + val));
    }
    return out;
}

// ---- edge list ----

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw parse_error("edge list must start with 'n m' header", 0);
    if (n < 1 || n > 1000000) throw parse_error("vertex count out of range", 0);
    if (m < 0) throw parse_error("negative edge count", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw parse_error("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                              static_cast<std::size_t>(in.tellg() < 0 ? (long long)text.size() : (long long)in.tellg()));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw parse_error("trailing tokens after edge list", static_cast<std::size_t>(in.tellg() < 0 ? (long long)text.size() : (long long)in.tellg()));
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const precondition_error& e) {
        throw parse_error(e.what(), 0);
    }
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace lapmatch
