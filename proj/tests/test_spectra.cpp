#include <doctest.h>

#include <cmath>

#include "lapmatch/enumerate.hpp"
#include "lapmatch/errors.hpp"
#include "lapmatch/spectra.hpp"
#include "oracles.hpp"

using namespace lapmatch;
using namespace lapmatch::testing;

namespace {

void check_spectrum(const Graph& g, const std::vector<double>& expected) {
    const SpectralSummary spec = spectrum(g);
    REQUIRE(spec.eigenvalues.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(std::abs(spec.eigenvalues[i] - expected[i]) <= 1e-9);
    CHECK(spec.residual <= 1e-8);
}

} // namespace

TEST_CASE("laplacian matrix entries") {
    const DenseMatrix l = laplacian_matrix(make_path(3));
    CHECK(l.at(0, 0) == 1.0);
    CHECK(l.at(1, 1) == 2.0);
    CHECK(l.at(0, 1) == -1.0);
    CHECK(l.at(0, 2) == 0.0);
}

TEST_CASE("closed-form spectra") {
    check_spectrum(make_complete(1), {0.0});
    check_spectrum(make_path(3), {0.0, 1.0, 3.0});
    check_spectrum(make_cycle(4), {0.0, 2.0, 2.0, 4.0});
    check_spectrum(make_star(4), {0.0, 1.0, 1.0, 1.0, 5.0});
    for (int n : {2, 5, 9, 14}) check_spectrum(make_complete(n), closed_form_complete(n));
    for (int n : {2, 6, 11}) check_spectrum(make_path(n), closed_form_path(n));
    for (int n : {3, 7, 12}) check_spectrum(make_cycle(n), closed_form_cycle(n));
    check_spectrum(make_complete_bipartite(2, 3), closed_form_complete_bipartite(2, 3));
    check_spectrum(make_complete_bipartite(4, 4), closed_form_complete_bipartite(4, 4));
    check_spectrum(make_join_clique_independent(3, 4), closed_form_join(3, 4));
    check_spectrum(make_join_clique_independent(5, 6), closed_form_join(5, 6));
}

TEST_CASE("mu2 flags connectivity") {
    CHECK(spectrum(make_path(6)).mu2 > 1e-9);
    const Graph split(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(std::abs(spectrum(split).mu2) <= 1e-9);
    CHECK(std::isnan(spectrum(make_complete(1)).mu2));
}

TEST_CASE("jacobi rejects asymmetric input") {
    DenseMatrix m(2);
    m.at(0, 1) = 1.0;
    CHECK_THROWS_AS(jacobi_eigen(m), precondition_error);
}

TEST_CASE("sweep cap raises convergence_error") {
    JacobiOptions opt;
    opt.max_sweeps = 0;
    CHECK_THROWS_AS(spectrum(make_complete(5), opt), convergence_error);
}

TEST_CASE("separation triple validation") {
    const Graph p3 = make_path(3);
    CHECK_THROWS_AS(SeparationTriple(p3, {1}, {}, {2}), precondition_error); // empty side
    CHECK_THROWS_AS(SeparationTriple(p3, {}, {0, 1}, {2}), precondition_error); // X-Y edge
    CHECK_THROWS_AS(SeparationTriple(p3, {1}, {0}, {0, 2}), precondition_error); // overlap
    CHECK_THROWS_AS(SeparationTriple(p3, {}, {0}, {2}), precondition_error); // not a cover
    const SeparationTriple ok(p3, {1}, {2}, {0}); // reorients so |X| <= |Y|
    CHECK(ok.small_side() == std::vector<int>{2});
}

TEST_CASE("separation inequality on the path with equality") {
    const Graph p3 = make_path(3);
    const SpectralSummary spec = spectrum(p3);
    const SeparationTriple triple(p3, {1}, {0}, {2});
    const SeparationCheck check = check_separation_inequality(p3, triple, spec);
    CHECK(check.lhs == doctest::Approx(0.25));
    CHECK(check.rhs == doctest::Approx(0.25)); // ((3-1)/(3+1))^2
    CHECK(check.holds);

    const SeparationBounds bounds = separation_bounds(p3, triple, spec);
    CHECK(bounds.x_upper == doctest::Approx(1.0)); // (3-1)/(2*3) * 3
    CHECK(bounds.s_lower == doctest::Approx(1.0)); // 2*1/(3-1) * 1
    CHECK(bounds.holds_x_upper);
    CHECK(bounds.holds_s_lower);
    CHECK(bounds.x_upper_equality);
    CHECK(bounds.s_lower_equality);
    CHECK(bounds.sizes_equal);
    CHECK_FALSE(bounds.degenerate);
}

TEST_CASE("separation inequality on the 4-cycle opposite pair") {
    const Graph c4 = make_cycle(4);
    const SpectralSummary spec = spectrum(c4);
    const SeparationTriple triple(c4, {1, 3}, {0}, {2});
    const SeparationCheck check = check_separation_inequality(c4, triple, spec);
    CHECK(check.lhs == doctest::Approx(1.0 / 9.0));
    CHECK(check.rhs == doctest::Approx(1.0 / 9.0)); // ((4-2)/(4+2))^2
    CHECK(check.holds);
}

TEST_CASE("separation inequality strict on the star") {
    const Graph star = make_star(4); // K_{1,4}: mu2 = 1, mun = 5
    const SpectralSummary spec = spectrum(star);
    const SeparationTriple triple(star, {0}, {1}, {2, 3, 4});
    const SeparationCheck check = check_separation_inequality(star, triple, spec);
    CHECK(check.lhs == doctest::Approx(3.0 / 8.0)); // 1*3/((5-1)(5-3))
    CHECK(check.rhs == doctest::Approx(4.0 / 9.0)); // ((5-1)/(5+1))^2
    CHECK(check.holds);
    CHECK(check.lhs < check.rhs - 1e-3);
}

TEST_CASE("triple sweep counts and flags") {
    const Graph p3 = make_path(3);
    const TripleSweepStats p3_stats = sweep_separation_triples(p3, spectrum(p3));
    CHECK(p3_stats.triples == 1);
    CHECK(p3_stats.separation_failures == 0);
    CHECK(p3_stats.unbalanced_equalities == 0);

    const Graph c4 = make_cycle(4);
    const TripleSweepStats c4_stats = sweep_separation_triples(c4, spectrum(c4));
    CHECK(c4_stats.triples == 2);
    CHECK(c4_stats.separation_failures == 0);
    CHECK(c4_stats.x_upper_failures == 0);
    CHECK(c4_stats.s_lower_failures == 0);
    CHECK(c4_stats.x_upper_equalities == 2);
    CHECK(c4_stats.s_lower_equalities == 2);
    CHECK(c4_stats.unbalanced_equalities == 0);

    // complete graphs admit no valid triple
    const Graph k4 = make_complete(4);
    CHECK(sweep_separation_triples(k4, spectrum(k4)).triples == 0);

    CHECK_THROWS_AS(sweep_separation_triples(Graph(3, {}), spectrum(Graph(3, {}))),
                    precondition_error);
}

TEST_CASE("triple sweep parallel kernel equals the serial reference") {
    for (std::uint64_t seed : {3u, 4u}) {
        const Graph g = make_random(9, 0.45, seed);
        if (g.edge_count() == 0) continue;
        const SpectralSummary spec = spectrum(g);
        const TripleSweepStats serial = sweep_separation_triples(g, spec, 1);
        const TripleSweepStats parallel = sweep_separation_triples(g, spec, 4);
        CHECK(serial.triples == parallel.triples);
        CHECK(serial.separation_failures == parallel.separation_failures);
        CHECK(serial.x_upper_failures == parallel.x_upper_failures);
        CHECK(serial.s_lower_failures == parallel.s_lower_failures);
        CHECK(serial.x_upper_equalities == parallel.x_upper_equalities);
        CHECK(serial.s_lower_equalities == parallel.s_lower_equalities);
        CHECK(serial.unbalanced_equalities == parallel.unbalanced_equalities);
    }
}

TEST_CASE("separation inequality holds across the small connected corpus") {
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n, true)) {
            const TripleSweepStats stats = sweep_separation_triples(g, spectrum(g));
            CHECK(stats.separation_failures == 0);
            CHECK(stats.x_upper_failures == 0);
            CHECK(stats.s_lower_failures == 0);
            CHECK(stats.unbalanced_equalities == 0);
        }
    }
}
