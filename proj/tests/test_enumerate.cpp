#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lapmatch/enumerate.hpp"
#include "lapmatch/graph.hpp"

using namespace lapmatch;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), edges);
}

} // namespace

TEST_CASE("code round trip") {
    const Graph g = make_complete_bipartite(2, 3);
    const Graph back = code_to_graph(graph_code(g), 5);
    CHECK(back.edges() == g.edges());
}

TEST_CASE("canonical code is invariant under relabeling") {
    const std::vector<Graph> samples = {
        make_path(6),
        make_cycle(7),
        make_complete_bipartite(3, 4),
        make_star(5),
        make_random(8, 0.4, 21),
        make_random(8, 0.7, 22),
        make_dumbbell(make_complete(3), make_complete(3)),
    };
    std::uint64_t perm_seed = 17;
    for (const Graph& g : samples) {
        const std::uint64_t canon = canonical_code(g);
        const int n = g.vertex_count();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 20; ++trial) {
            // Fisher-Yates with a deterministic LCG
            for (int i = n - 1; i > 0; --i) {
                perm_seed = perm_seed * 6364136223846793005ULL + 1442695040888963407ULL;
                std::swap(perm[i], perm[perm_seed % (i + 1)]);
            }
            CHECK(canonical_code(permuted(g, perm)) == canon);
        }
    }
}

TEST_CASE("canonical code separates non-isomorphic graphs via labeled sweep") {
    // every labeled graph on n vertices, counted up to isomorphism through
    // the canonical form, must reproduce the known counts
    const std::vector<long long> all_counts = {1, 2, 4, 11, 34, 156};
    const std::vector<long long> connected_counts = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint64_t> all, connected;
        const int bits = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
            const Graph g = code_to_graph(code, n);
            const std::uint64_t canon = canonical_code(g);
            all.insert(canon);
            if (g.connected()) connected.insert(canon);
        }
        CHECK(static_cast<long long>(all.size()) == all_counts[n - 1]);
        CHECK(static_cast<long long>(connected.size()) == connected_counts[n - 1]);
    }
}

TEST_CASE("enumeration matches the known graph counts") {
    const std::vector<long long> all_counts = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<long long> connected_counts = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        const auto codes = enumerate_codes(n, false);
        CHECK(static_cast<long long>(codes.size()) == all_counts[n - 1]);
        CHECK(std::is_sorted(codes.begin(), codes.end()));
        const auto conn = enumerate_codes(n, true);
        CHECK(static_cast<long long>(conn.size()) == connected_counts[n - 1]);
    }
}

TEST_CASE("enumerated codes are canonical and distinct") {
    const auto codes = enumerate_codes(6, true);
    std::set<std::uint64_t> seen(codes.begin(), codes.end());
    CHECK(seen.size() == codes.size());
    for (std::uint64_t code : codes) {
        const Graph g = code_to_graph(code, 6);
        CHECK(canonical_code(g) == code);
        CHECK(g.connected());
    }
}

TEST_CASE("parallel enumeration equals the serial reference") {
    for (int n : {5, 6, 7}) {
        CHECK(enumerate_codes(n, true, 4) == enumerate_codes(n, true, 1));
        CHECK(enumerate_codes(n, false, 4) == enumerate_codes(n, false, 1));
    }
}

TEST_CASE("enumerate_graphs materializes the codes") {
    const auto graphs = enumerate_graphs(5, true);
    CHECK(graphs.size() == 21);
    for (const Graph& g : graphs) {
        CHECK(g.vertex_count() == 5);
        CHECK(g.connected());
    }
}
