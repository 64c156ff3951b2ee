#include "lapmatch/matching.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "lapmatch/errors.hpp"
#include "lapmatch/structure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapmatch {

namespace {

// Blossom augmentation. base[v] is the representative of the contracted
// blossom containing v; used[] marks the outer (evenly reachable) vertices of
// the current alternating forest.
struct BlossomSearch {
    const Graph* g;
    int n;
    std::vector<int> match, p, base;
    std::vector<char> used, in_blossom;

    explicit BlossomSearch(const Graph& graph)
        : g(&graph), n(graph.vertex_count()), match(n, -1), p(n, -1), base(n, 0), used(n, 0),
          in_blossom(n, 0) {}

    int lowest_common_base(int a, int b) {
        std::vector<char> mark(n, 0);
        for (;;) {
            a = base[a];
            mark[a] = 1;
            if (match[a] == -1) break;
            a = p[match[a]];
        }
        for (;;) {
            b = base[b];
            if (mark[b]) return b;
            b = p[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            p[v] = child;
            child = match[v];
            v = p[match[v]];
        }
    }

    // Alternating BFS from an exposed root. Augments and returns true when an
    // exposed vertex is reached; otherwise leaves used[] holding the outer set.
    bool find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int v = 0; v < n; ++v) base[v] = v;

        std::queue<int> q;
        used[root] = 1;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g->neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = b;
                        if (!used[i]) {
                            used[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (match[to] == -1) {
                        for (int u = to; u != -1;) {
                            int pv = p[u], next = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = next;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return false;
    }
};

} // namespace

MatchingCertificate maximum_matching(const Graph& g) {
    int n = g.vertex_count();
    BlossomSearch search(g);

    // greedy seed, then one augmentation attempt per remaining exposed vertex
    for (int v = 0; v < n; ++v) {
        if (search.match[v] != -1) continue;
        for (int u : g.neighbors(v))
            if (search.match[u] == -1) {
                search.match[v] = u;
                search.match[u] = v;
                break;
            }
    }
    for (int v = 0; v < n; ++v)
        if (search.match[v] == -1) search.find_augmenting_path(v);

    MatchingCertificate out;
    for (int v = 0; v < n; ++v)
        if (search.match[v] > v) out.matching.emplace_back(v, search.match[v]);
    out.size = static_cast<int>(out.matching.size());
    out.deficiency = n - 2 * out.size;

    // The exposed vertices' alternating searches now all fail; their outer
    // sets union to the set D of vertices missed by some maximum matching,
    // and N(D) - D minimizes |S| - o(G-S).
    std::vector<char> missable(n, 0);
    for (int v = 0; v < n; ++v) {
        if (search.match[v] != -1) continue;
        if (search.find_augmenting_path(v)) throw std::logic_error("matching was not maximum");
        for (int u = 0; u < n; ++u)
            if (search.used[u]) missable[u] = 1;
    }
    std::vector<char> in_witness(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!missable[v]) continue;
        for (int u : g.neighbors(v))
            if (!missable[u]) in_witness[u] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (in_witness[v]) out.witness_s.push_back(v);

    ComponentReport rest = components(g, out.witness_s);
    if (rest.odd_count - static_cast<int>(out.witness_s.size()) != out.deficiency)
        throw std::logic_error("matching witness does not certify the deficiency");
    return out;
}

namespace {

// Lexicographic order on the sorted vertex lists of two equal-size subsets:
// the lowest differing bit belongs to the smaller list.
bool subset_less(int value_a, std::uint64_t a, int value_b, std::uint64_t b) {
    if (value_a != value_b) return value_a < value_b;
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    std::uint64_t diff = a ^ b;
    return a & (diff & -diff);
}

} // namespace

SubsetMinimizer berge_tutte_min_exhaustive(const Graph& g, int cap, int jobs) {
    int n = g.vertex_count();
    if (n > cap) throw precondition_error("exhaustive subset scan cap exceeded");
    if (n > 20) throw precondition_error("exhaustive subset scan limited to n <= 20");

    std::uint64_t total = std::uint64_t{1} << n;
    auto value_of = [&g](std::uint64_t mask) {
        return std::popcount(mask) - component_parity_counts(g, mask).first;
    };

    std::uint64_t best_mask = 0;
    int best_value = value_of(0);
    if (jobs == 1) {
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            int value = value_of(mask);
            if (subset_less(value, mask, best_value, best_mask)) {
                best_value = value;
                best_mask = mask;
            }
        }
    } else {
#ifdef _OPENMP
        int threads = jobs > 0 ? jobs : omp_get_max_threads();
        std::vector<std::uint64_t> masks(threads, 0);
        std::vector<int> values(threads, best_value);
#pragma omp parallel num_threads(threads)
        {
            int tid = omp_get_thread_num();
#pragma omp for schedule(static)
            for (long long mask = 1; mask < static_cast<long long>(total); ++mask) {
                int value = value_of(static_cast<std::uint64_t>(mask));
                if (subset_less(value, static_cast<std::uint64_t>(mask), values[tid], masks[tid])) {
                    values[tid] = value;
                    masks[tid] = static_cast<std::uint64_t>(mask);
                }
            }
        }
        for (int t = 0; t < threads; ++t)
            if (subset_less(values[t], masks[t], best_value, best_mask)) {
                best_value = values[t];
                best_mask = masks[t];
            }
#else
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            int value = value_of(mask);
            if (subset_less(value, mask, best_value, best_mask)) {
                best_value = value;
                best_mask = mask;
            }
        }
#endif
    }

    SubsetMinimizer out;
    out.value = best_value;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) out.set.push_back(v);
    return out;
}

bool has_perfect_matching(const Graph& g) {
    int n = g.vertex_count();
    return n % 2 == 0 && maximum_matching(g).size * 2 == n;
}

FactorCriticalVerdict factor_critical(const Graph& g) {
    int n = g.vertex_count();
    FactorCriticalVerdict out;
    out.is_factor_critical = true;
    // n == 1 deletes to the null graph, whose empty matching is perfect
    for (int v = 0; n > 1 && v < n && out.is_factor_critical; ++v) {
        if (!has_perfect_matching(g.without_vertices({v}))) {
            out.is_factor_critical = false;
            out.failing_vertex = v;
        }
    }

    if (n <= 16) {
        bool subset_verdict = n % 2 == 1;
        std::optional<std::vector<int>> witness;
        if (n % 2 == 1) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                auto [odd, total] = component_parity_counts(g, mask);
                if (odd > std::popcount(mask)) {
                    subset_verdict = false;
                    std::vector<int> set;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1) set.push_back(v);
                    witness = std::move(set);
                    break;
                }
            }
        }
        if (subset_verdict != out.is_factor_critical)
            throw std::logic_error("factor-critical deciders disagree");
        out.gallai_witness = std::move(witness);
    }
    return out;
}

} // namespace lapmatch
