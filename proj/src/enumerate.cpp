#include "lapmatch/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapmatch {

namespace {

constexpr int kMaxEnumVertices = 11; // n(n-1)/2 must fit in 64 bits

using Rows = std::array<std::uint16_t, kMaxEnumVertices>;

std::uint64_t rows_to_code(int n, const Rows& rows) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (rows[i] >> j & 1) code |= std::uint64_t{1} << bit;
    return code;
}

void code_to_rows(std::uint64_t code, int n, Rows& rows) {
    rows.fill(0);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (code >> bit & 1) {
                rows[i] |= std::uint16_t(1u << j);
                rows[j] |= std::uint16_t(1u << i);
            }
}

bool rows_connected(int n, const Rows& rows) {
    std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
    std::uint16_t seen = 1;
    for (;;) {
        std::uint16_t frontier = 0;
        std::uint16_t work = seen;
        while (work) {
            int v = std::countr_zero(work);
            work &= static_cast<std::uint16_t>(work - 1);
            frontier |= rows[v];
        }
        std::uint16_t grown = static_cast<std::uint16_t>(seen | frontier);
        if (grown == seen) break;
        seen = grown;
    }
    return seen == all;
}

// Equitable refinement: colors are ordered class ids; classes split by the
// multiset of neighbor colors until stable.
void refine_colors(int n, const Rows& rows, std::array<int, kMaxEnumVertices>& color) {
    struct Key {
        int old_color;
        std::array<int, kMaxEnumVertices> counts; // neighbor count per color
        int ncolors;
    };
    for (;;) {
        int ncolors = 0;
        for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, color[v] + 1);
        std::array<Key, kMaxEnumVertices> keys{};
        std::array<int, kMaxEnumVertices> order{};
        for (int v = 0; v < n; ++v) {
            keys[v].old_color = color[v];
            keys[v].ncolors = ncolors;
            keys[v].counts.fill(0);
            std::uint16_t nb = rows[v];
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= static_cast<std::uint16_t>(nb - 1);
                ++keys[v].counts[color[u]];
            }
            order[v] = v;
        }
        auto less = [&](int a, int b) {
            if (keys[a].old_color != keys[b].old_color) return keys[a].old_color < keys[b].old_color;
            for (int c = 0; c < ncolors; ++c)
                if (keys[a].counts[c] != keys[b].counts[c]) return keys[a].counts[c] > keys[b].counts[c];
            return false;
        };
        auto equal = [&](int a, int b) { return !less(a, b) && !less(b, a); };
        std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
            if (less(a, b)) return true;
            if (less(b, a)) return false;
            return a < b;
        });
        std::array<int, kMaxEnumVertices> next{};
        int c = 0;
        next[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (!equal(order[i], order[i - 1])) ++c;
            next[order[i]] = c;
        }
        if (c + 1 == ncolors) return; // no class split, partition is equitable
        color = next;
    }
}

struct CanonSearch {
    int n;
    const Rows* rows;
    std::uint64_t best;

    std::uint64_t leaf_code(const std::array<int, kMaxEnumVertices>& color) const {
        std::array<int, kMaxEnumVertices> at_pos{};
        for (int v = 0; v < n; ++v) at_pos[color[v]] = v;
        std::uint64_t code = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((*rows)[at_pos[i]] >> at_pos[j] & 1) code |= std::uint64_t{1} << bit;
        return code;
    }

    void descend(std::array<int, kMaxEnumVertices> color) {
        refine_colors(n, *rows, color);
        // first non-singleton class, in class order
        int target = -1;
        std::array<int, kMaxEnumVertices> class_size{};
        class_size.fill(0);
        for (int v = 0; v < n; ++v) ++class_size[color[v]];
        for (int c = 0; c < n; ++c)
            if (class_size[c] > 1) {
                target = c;
                break;
            }
        if (target < 0) {
            best = std::max(best, leaf_code(color));
            return;
        }
        std::array<int, kMaxEnumVertices> members{};
        int nm = 0;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) members[nm++] = v;
        // branch once per twin class: swapping vertices with identical
        // adjacency outside the pair is an automorphism
        std::array<int, kMaxEnumVertices> kept{};
        int nk = 0;
        for (int i = 0; i < nm; ++i) {
            int u = members[i];
            bool twin = false;
            for (int k = 0; k < nk && !twin; ++k) {
                int w = kept[k];
                std::uint16_t diff = (*rows)[u] ^ (*rows)[w];
                diff &= static_cast<std::uint16_t>(~((1u << u) | (1u << w)));
                twin = diff == 0;
            }
            if (twin) continue;
            kept[nk++] = u;
            std::array<int, kMaxEnumVertices> next = color;
            for (int v = 0; v < n; ++v)
                if (next[v] > target || (next[v] == target && v != u)) ++next[v];
            descend(next);
        }
    }
};

std::uint64_t canonical_code_rows(int n, const Rows& rows) {
    if (n == 1) return 0;
    std::array<int, kMaxEnumVertices> color{};
    // initial coloring by degree, high degree first
    std::array<int, kMaxEnumVertices> deg{};
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(static_cast<unsigned>(rows[v]));
    std::array<int, kMaxEnumVertices> order{};
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] > deg[b];
        return a < b;
    });
    int c = 0;
    color[order[0]] = 0;
    for (int i = 1; i < n; ++i) {
        if (deg[order[i]] != deg[order[i - 1]]) ++c;
        color[order[i]] = c;
    }
    CanonSearch search{n, &rows, 0};
    search.descend(color);
    return search.best;
}

// All children of one parent graph: add vertex n-1 attached to each neighbor
// subset, canonicalize, optionally keep only connected results.
void children_of(std::uint64_t parent, int n, bool connected_only, std::vector<std::uint64_t>& out) {
    Rows rows;
    code_to_rows(parent, n - 1, rows);
    std::uint16_t full = static_cast<std::uint16_t>((1u << (n - 1)) - 1);
    for (std::uint16_t subset = 0; subset <= full; ++subset) {
        Rows child = rows;
        child[n - 1] = subset;
        std::uint16_t sub = subset;
        while (sub) {
            int v = std::countr_zero(sub);
            sub &= static_cast<std::uint16_t>(sub - 1);
            child[v] |= static_cast<std::uint16_t>(1u << (n - 1));
        }
        if (connected_only && !rows_connected(n, child)) continue;
        out.push_back(canonical_code_rows(n, child));
        if (subset == full) break; // uint16 wrap guard
    }
}

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<std::uint64_t> augment_serial(const std::vector<std::uint64_t>& parents, int n, bool connected_only) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t parent : parents) children_of(parent, n, connected_only, out);
    sort_unique(out);
    return out;
}

std::vector<std::uint64_t> augment_parallel(const std::vector<std::uint64_t>& parents, int n, bool connected_only, int jobs) {
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<std::vector<std::uint64_t>> local(threads);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t>& mine = local[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(parents.size()); ++i)
            children_of(parents[i], n, connected_only, mine);
    }
    std::vector<std::uint64_t> out;
    for (auto& chunk : local) out.insert(out.end(), chunk.begin(), chunk.end());
    sort_unique(out);
    return out;
#else
    (void)jobs;
    return augment_serial(parents, n, connected_only);
#endif
}

} // namespace

std::uint64_t graph_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxEnumVertices) throw precondition_error("graph code limited to n <= 11");
    std::uint64_t code = 0;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) code |= std::uint64_t{1} << bit;
    return code;
}

Graph code_to_graph(std::uint64_t code, int n) {
    if (n < 1 || n > kMaxEnumVertices) throw precondition_error("graph code limited to 1 <= n <= 11");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (code >> bit & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxEnumVertices) throw precondition_error("canonical code limited to n <= 11");
    Rows rows;
    rows.fill(0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= static_cast<std::uint16_t>(1u << v);
        rows[v] |= static_cast<std::uint16_t>(1u << u);
    }
    return canonical_code_rows(n, rows);
}

std::vector<std::uint64_t> enumerate_codes(int n, bool connected_only, int jobs) {
    if (n < 1 || n > kMaxEnumVertices) throw precondition_error("enumeration limited to 1 <= n <= 11");
    std::vector<std::uint64_t> level{0}; // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        bool last = k == n;
        bool filter = last && connected_only;
        level = jobs == 1 ? augment_serial(level, k, filter) : augment_parallel(level, k, filter, jobs);
    }
    if (n == 1) return {0};
    return level;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int jobs) {
    std::vector<std::uint64_t> codes = enumerate_codes(n, connected_only, jobs);
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(code_to_graph(code, n));
    return out;
}

} // namespace lapmatch
