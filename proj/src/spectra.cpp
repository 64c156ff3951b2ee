#include "lapmatch/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "lapmatch/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapmatch {

DenseMatrix laplacian_matrix(const Graph& g) {
    int n = g.vertex_count();
    DenseMatrix m(n);
    for (int v = 0; v < n; ++v) m.at(v, v) = g.degree(v);
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = -1.0;
        m.at(v, u) = -1.0;
    }
    return m;
}

namespace {

double off_diagonal_norm(const DenseMatrix& m) {
    double sum = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j) sum += m.at(i, j) * m.at(i, j);
    return std::sqrt(2.0 * sum);
}

double frobenius_norm(const DenseMatrix& m) {
    double sum = 0.0;
    for (double v : m.a) sum += v * v;
    return std::sqrt(sum);
}

void rotate(DenseMatrix& a, DenseMatrix& v, int p, int q) {
    double apq = a.at(p, q);
    if (std::abs(apq) < 1e-300) {
        a.at(p, q) = a.at(q, p) = 0.0;
        return;
    }
    double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
    double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    double c = 1.0 / std::sqrt(t * t + 1.0);
    double s = t * c;
    a.at(p, p) -= t * apq;
    a.at(q, q) += t * apq;
    a.at(p, q) = a.at(q, p) = 0.0;
    for (int i = 0; i < a.n; ++i) {
        if (i == p || i == q) continue;
        double aip = a.at(i, p), aiq = a.at(i, q);
        a.at(i, p) = a.at(p, i) = c * aip - s * aiq;
        a.at(i, q) = a.at(q, i) = s * aip + c * aiq;
    }
    for (int i = 0; i < v.n; ++i) {
        double vip = v.at(i, p), viq = v.at(i, q);
        v.at(i, p) = c * vip - s * viq;
        v.at(i, q) = s * vip + c * viq;
    }
}

} // namespace

EigenSystem jacobi_eigen(const DenseMatrix& m, const JacobiOptions& opt) {
    int n = m.n;
    if (n < 1) throw precondition_error("eigensolver requires n >= 1");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw precondition_error("eigensolver requires a symmetric matrix");

    DenseMatrix a = m;
    DenseMatrix v(n);
    for (int i = 0; i < n; ++i) v.at(i, i) = 1.0;

    double target = opt.rel_tol * frobenius_norm(m);
    int sweeps = 0;
    while (off_diagonal_norm(a) > target) {
        if (sweeps >= opt.max_sweeps) throw convergence_error("eigensolver did not converge within the sweep cap");
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (a.at(i, i) != a.at(j, j)) return a.at(i, i) < a.at(j, j);
        return i < j;
    });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = DenseMatrix(n);
    out.sweeps = sweeps;
    for (int k = 0; k < n; ++k) {
        out.values[k] = a.at(order[k], order[k]);
        for (int i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
    }

    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            double r = -out.values[k] * out.vectors.at(i, k);
            for (int j = 0; j < n; ++j) r += m.at(i, j) * out.vectors.at(j, k);
            out.residual = std::max(out.residual, std::abs(r));
        }
    }
    return out;
}

SpectralSummary spectrum(const Graph& g, const JacobiOptions& opt) {
    int n = g.vertex_count();
    EigenSystem es = jacobi_eigen(laplacian_matrix(g), opt);

    SpectralSummary out;
    out.n = n;
    out.eigenvalues = std::move(es.values);
    out.mu2 = n >= 2 ? out.eigenvalues[1] : std::numeric_limits<double>::quiet_NaN();
    out.mun = out.eigenvalues.back();
    out.residual = es.residual;
    out.tolerance = kSpectralTolerance;

    double tol = out.tolerance;
    if (std::abs(out.eigenvalues.front()) > tol) throw std::logic_error("spectral invariant violated: smallest eigenvalue not zero");
    double degree_sum = 0.0;
    for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
    double trace_err = std::abs(std::accumulate(out.eigenvalues.begin(), out.eigenvalues.end(), 0.0) - degree_sum);
    if (trace_err > tol * (1.0 + degree_sum)) throw std::logic_error("spectral invariant violated: eigenvalue sum differs from trace");
    for (double mu : out.eigenvalues)
        if (mu < -tol || mu > n + tol) throw std::logic_error("spectral invariant violated: eigenvalue outside [0, n]");
    if (n >= 2 && (out.mu2 > tol) != g.connected())
        throw std::logic_error("spectral invariant violated: algebraic connectivity disagrees with reachability");
    return out;
}

namespace {

void check_sorted_vertices(const Graph& g, std::vector<int>& set, const char* name) {
    std::sort(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 0 || set[i] >= g.vertex_count()) throw precondition_error(std::string(name) + " contains an out-of-range vertex");
        if (i > 0 && set[i] == set[i - 1]) throw precondition_error(std::string(name) + " contains a duplicate vertex");
    }
}

void require_edge(const Graph& g) {
    if (g.edge_count() == 0) throw precondition_error("separation checks require at least one edge");
}

void require_matching_summary(const Graph& g, const SpectralSummary& spec) {
    if (spec.n != g.vertex_count()) throw precondition_error("spectral summary does not match the graph");
}

} // namespace

SeparationTriple::SeparationTriple(const Graph& g, std::vector<int> separator, std::vector<int> side_a,
                                   std::vector<int> side_b)
    : s_(std::move(separator)), x_(std::move(side_a)), y_(std::move(side_b)) {
    check_sorted_vertices(g, s_, "separator");
    check_sorted_vertices(g, x_, "side X");
    check_sorted_vertices(g, y_, "side Y");
    if (x_.empty() || y_.empty()) throw precondition_error("both sides of a separation must be nonempty");

    int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    auto claim = [&](const std::vector<int>& set) {
        for (int v : set) {
            if (owner[v] != -1) throw precondition_error("separation parts must be disjoint");
            owner[v] = 0;
        }
    };
    claim(s_);
    claim(x_);
    claim(y_);
    if (s_.size() + x_.size() + y_.size() != static_cast<std::size_t>(n))
        throw precondition_error("separation parts must cover every vertex");

    for (int u : x_)
        for (int v : y_)
            if (g.has_edge(u, v)) throw precondition_error("no edge may join the two sides of a separation");

    if (x_.size() > y_.size()) std::swap(x_, y_);
}

SeparationCheck check_separation_inequality(const Graph& g, const SeparationTriple& triple,
                                            const SpectralSummary& spec) {
    require_edge(g);
    require_matching_summary(g, spec);
    double n = g.vertex_count();
    double x = static_cast<double>(triple.small_side().size());
    double y = static_cast<double>(triple.large_side().size());
    SeparationCheck out;
    out.lhs = (x * y) / ((n - x) * (n - y));
    double ratio = (spec.mun - spec.mu2) / (spec.mun + spec.mu2);
    out.rhs = ratio * ratio;
    out.holds = out.lhs <= out.rhs + spec.tolerance;
    return out;
}

SeparationBounds separation_bounds(const Graph& g, const SeparationTriple& triple,
                                   const SpectralSummary& spec) {
    require_edge(g);
    require_matching_summary(g, spec);
    double n = g.vertex_count();
    double x = static_cast<double>(triple.small_side().size());
    double y = static_cast<double>(triple.large_side().size());
    double s = static_cast<double>(triple.separator().size());
    double gap = spec.mun - spec.mu2;

    SeparationBounds out;
    out.sizes_equal = triple.small_side().size() == triple.large_side().size();
    out.x_upper = gap / (2.0 * spec.mun) * n;
    out.holds_x_upper = x <= out.x_upper + spec.tolerance;
    out.x_upper_equality = std::abs(x - out.x_upper) <= spec.tolerance;
    if (gap <= spec.tolerance) {
        out.degenerate = true;
        out.s_lower = std::numeric_limits<double>::infinity();
        out.holds_s_lower = false;
        out.s_lower_equality = false;
        return out;
    }
    out.s_lower = 2.0 * spec.mu2 / gap * x;
    out.holds_s_lower = s >= out.s_lower - spec.tolerance;
    out.s_lower_equality = std::abs(s - out.s_lower) <= spec.tolerance;
    return out;
}

namespace {

// One base-3 assignment of vertices to separator (0), X (1), Y (2). To count
// each unordered triple once, the lowest vertex outside the separator must be
// labeled X.
struct TripleScan {
    const Graph* g;
    const SpectralSummary* spec;
    int n;
    std::vector<std::uint64_t> adj;

    void accumulate(std::uint64_t code, TripleSweepStats& stats) const {
        std::uint64_t mask_x = 0, mask_y = 0;
        int first_side = -1;
        for (int v = 0; v < n; ++v) {
            int part = static_cast<int>(code % 3);
            code /= 3;
            if (part == 0) continue;
            if (first_side < 0) first_side = part;
            (part == 1 ? mask_x : mask_y) |= std::uint64_t{1} << v;
        }
        if (mask_x == 0 || mask_y == 0 || first_side != 1) return;
        std::uint64_t work = mask_x;
        while (work) {
            int v = std::countr_zero(work);
            work &= work - 1;
            if (adj[v] & mask_y) return;
        }

        double x = std::popcount(mask_x);
        double y = std::popcount(mask_y);
        if (x > y) std::swap(x, y);
        double nn = n;
        double s = nn - x - y;
        double tol = spec->tolerance;
        double gap = spec->mun - spec->mu2;

        ++stats.triples;
        double ratio = gap / (spec->mun + spec->mu2);
        if ((x * y) / ((nn - x) * (nn - y)) > ratio * ratio + tol) ++stats.separation_failures;

        double x_upper = gap / (2.0 * spec->mun) * nn;
        if (x > x_upper + tol) ++stats.x_upper_failures;
        if (std::abs(x - x_upper) <= tol) {
            ++stats.x_upper_equalities;
            if (x != y) ++stats.unbalanced_equalities;
        }

        if (gap <= tol) return; // separator bound degenerate, nothing to count
        double s_lower = 2.0 * spec->mu2 / gap * x;
        if (s < s_lower - tol) ++stats.s_lower_failures;
        if (std::abs(s - s_lower) <= tol) {
            ++stats.s_lower_equalities;
            if (x != y) ++stats.unbalanced_equalities;
        }
    }
};

void merge_stats(TripleSweepStats& into, const TripleSweepStats& part) {
    into.triples += part.triples;
    into.separation_failures += part.separation_failures;
    into.x_upper_failures += part.x_upper_failures;
    into.s_lower_failures += part.s_lower_failures;
    into.x_upper_equalities += part.x_upper_equalities;
    into.s_lower_equalities += part.s_lower_equalities;
    into.unbalanced_equalities += part.unbalanced_equalities;
}

} // namespace

TripleSweepStats sweep_separation_triples(const Graph& g, const SpectralSummary& spec, int jobs) {
    int n = g.vertex_count();
    if (n > 16) throw precondition_error("triple sweep limited to n <= 16");
    require_matching_summary(g, spec);
    if (n == 1) return {};
    require_edge(g);

    TripleScan scan{&g, &spec, n, g.adjacency_masks()};
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= 3;

    TripleSweepStats stats;
    if (jobs == 1) {
        for (std::uint64_t code = 0; code < total; ++code) scan.accumulate(code, stats);
        return stats;
    }

#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
    std::vector<TripleSweepStats> parts(threads);
#pragma omp parallel num_threads(threads)
    {
        TripleSweepStats& mine = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (long long code = 0; code < static_cast<long long>(total); ++code)
            scan.accumulate(static_cast<std::uint64_t>(code), mine);
    }
    for (const TripleSweepStats& part : parts) merge_stats(stats, part);
#else
    for (std::uint64_t code = 0; code < total; ++code) scan.accumulate(code, stats);
#endif
    return stats;
}

} // namespace lapmatch
