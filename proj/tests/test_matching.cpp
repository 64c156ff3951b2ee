#include <doctest.h>

#include <set>

#include "lapmatch/enumerate.hpp"
#include "lapmatch/errors.hpp"
#include "lapmatch/matching.hpp"
#include "lapmatch/structure.hpp"
#include "oracles.hpp"

using namespace lapmatch;
using namespace lapmatch::testing;

namespace {

void check_certificate(const Graph& g) {
    const MatchingCertificate cert = maximum_matching(g);
    CHECK(cert.size == brute_matching_number(g));
    CHECK(cert.size == static_cast<int>(cert.matching.size()));
    CHECK(cert.deficiency == g.vertex_count() - 2 * cert.size);

    // matching edges are vertex-disjoint graph edges
    std::set<int> used;
    for (const auto& [u, v] : cert.matching) {
        CHECK(g.has_edge(u, v));
        CHECK(used.insert(u).second);
        CHECK(used.insert(v).second);
    }

    // the witness certifies the deficiency through the parity count
    int odd = 0;
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : cert.witness_s) in_s[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (in_s[start] || seen[start]) continue;
        int size = 0;
        std::vector<int> stack = {start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++size;
            for (int u : g.neighbors(v))
                if (!in_s[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        odd += size % 2;
    }
    CHECK(odd - static_cast<int>(cert.witness_s.size()) == cert.deficiency);
}

} // namespace

TEST_CASE("maximum matching on hand-checked graphs") {
    CHECK(maximum_matching(make_complete(2)).size == 1);
    CHECK(maximum_matching(make_path(3)).size == 1);
    CHECK(maximum_matching(make_cycle(5)).size == 2);
    CHECK(maximum_matching(make_complete_bipartite(3, 7)).size == 3);
    CHECK(maximum_matching(Graph(3, {})).size == 0);
    CHECK(maximum_matching(make_complete(1)).size == 0);

    // blossom contraction is exercised by odd cycles glued at a vertex
    const Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(maximum_matching(bowtie).size == 2);
}

TEST_CASE("witness sets on hand-checked graphs") {
    const MatchingCertificate p3 = maximum_matching(make_path(3));
    CHECK(p3.witness_s == std::vector<int>{1});
    CHECK(p3.deficiency == 1);

    const MatchingCertificate k37 = maximum_matching(make_complete_bipartite(3, 7));
    CHECK(k37.witness_s == std::vector<int>{0, 1, 2});
    CHECK(k37.deficiency == 4);

    CHECK(maximum_matching(make_cycle(4)).witness_s.empty());
    CHECK(maximum_matching(Graph(4, {})).witness_s.empty());
}

TEST_CASE("matching equals brute force across the small connected corpus") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n, true)) check_certificate(g);
}

TEST_CASE("matching equals brute force on random graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        check_certificate(make_random(10, 0.1 * (1 + seed % 8), seed));
}

TEST_CASE("perfect matching decision") {
    CHECK(has_perfect_matching(make_cycle(6)));
    CHECK_FALSE(has_perfect_matching(make_cycle(5)));
    CHECK_FALSE(has_perfect_matching(make_star(3)));
    CHECK(has_perfect_matching(make_complete_bipartite(4, 4)));
}

TEST_CASE("exhaustive deficiency minimizer agrees with the blossom value") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n, true)) {
            const SubsetMinimizer min = berge_tutte_min_exhaustive(g);
            const MatchingCertificate cert = maximum_matching(g);
            // alpha' = (n + min_S(|S| - o(G-S))) / 2
            CHECK(2 * cert.size == g.vertex_count() + min.value);
        }
    }
}

TEST_CASE("exhaustive minimizer tie-break is deterministic") {
    // P3 reaches value -1 with both S = {} and S = {1}
    const Graph p3 = make_path(3);
    const SubsetMinimizer min = berge_tutte_min_exhaustive(p3);
    CHECK(min.value == -1);
    CHECK(min.set.empty()); // smaller set wins among ties

    const SubsetMinimizer parallel = berge_tutte_min_exhaustive(p3, 16, 4);
    CHECK(parallel.value == min.value);
    CHECK(parallel.set == min.set);
}

TEST_CASE("exhaustive minimizer parallel kernel equals the serial reference") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        const Graph g = make_random(12, 0.3, seed);
        const SubsetMinimizer serial = berge_tutte_min_exhaustive(g, 16, 1);
        const SubsetMinimizer parallel = berge_tutte_min_exhaustive(g, 16, 4);
        CHECK(serial.value == parallel.value);
        CHECK(serial.set == parallel.set);
    }
    CHECK_THROWS_AS(berge_tutte_min_exhaustive(make_random(18, 0.2, 1), 16), precondition_error);
}

TEST_CASE("factor-critical verdicts") {
    CHECK(factor_critical(make_complete(1)).is_factor_critical);
    CHECK(factor_critical(make_cycle(5)).is_factor_critical);
    CHECK(factor_critical(make_complete(7)).is_factor_critical);
    CHECK_FALSE(factor_critical(make_cycle(4)).is_factor_critical);

    const FactorCriticalVerdict p3 = factor_critical(make_path(3));
    CHECK_FALSE(p3.is_factor_critical);
    CHECK(p3.failing_vertex == 1); // deleting the middle isolates both endpoints
    REQUIRE(p3.gallai_witness.has_value());
    CHECK(*p3.gallai_witness == std::vector<int>{1});

    // bipartite graphs of odd order are never factor-critical
    for (int s = 2; s <= 6; ++s)
        CHECK_FALSE(factor_critical(make_complete_bipartite(s, s + 1)).is_factor_critical);
}

TEST_CASE("factor-critical agrees with brute force on the odd corpus") {
    for (int n : {3, 5, 7}) {
        for (const Graph& g : enumerate_graphs(n, true)) {
            CHECK(factor_critical(g).is_factor_critical == brute_factor_critical(g));
        }
    }
}
