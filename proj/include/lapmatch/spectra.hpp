#pragma once

#include <vector>

#include "lapmatch/graph.hpp"

namespace lapmatch {

// Dense symmetric matrix, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// L = D - A. Rows sum to zero.
DenseMatrix laplacian_matrix(const Graph& g);

struct JacobiOptions {
    double rel_tol = 1e-12; // off-diagonal Frobenius target, relative to the input norm
    int max_sweeps = 100;
};

struct EigenSystem {
    std::vector<double> values; // ascending
    DenseMatrix vectors;        // column k pairs with values[k]
    double residual = 0.0;      // max over pairs of the infinity norm of A v - lambda v
    int sweeps = 0;
};

// Cyclic Jacobi. Throws convergence_error if the sweep cap is hit.
EigenSystem jacobi_eigen(const DenseMatrix& m, const JacobiOptions& opt = {});

inline constexpr double kSpectralTolerance = 1e-9;

struct SpectralSummary {
    int n = 0;
    std::vector<double> eigenvalues; // ascending, length n
    double mu2 = 0.0;                // algebraic connectivity; NaN when n == 1
    double mun = 0.0;                // largest eigenvalue
    double residual = 0.0;
    double tolerance = kSpectralTolerance;
};

// Full Laplacian spectrum. Checks the summary invariants (zero first
// eigenvalue, trace, spectral range, connectivity iff mu2 > tolerance) and
// throws logic_error if the solver output violates them.
SpectralSummary spectrum(const Graph& g, const JacobiOptions& opt = {});

// Partition of V into separator S and nonempty sides X, Y with no X-Y edge.
// Construction validates against the graph and orients so |X| <= |Y|.
class SeparationTriple {
  public:
    SeparationTriple(const Graph& g, std::vector<int> separator, std::vector<int> side_a,
                     std::vector<int> side_b);

    const std::vector<int>& separator() const { return s_; }
    const std::vector<int>& small_side() const { return x_; }
    const std::vector<int>& large_side() const { return y_; }

  private:
    std::vector<int> s_, x_, y_;
};

struct SeparationCheck {
    double lhs = 0.0; // |X||Y| / ((n-|X|)(n-|Y|))
    double rhs = 0.0; // ((mun-mu2)/(mun+mu2))^2
    bool holds = false;
};

// The eigenvalue separation inequality: lhs <= rhs for every valid triple.
// Requires at least one edge.
SeparationCheck check_separation_inequality(const Graph& g, const SeparationTriple& triple,
                                            const SpectralSummary& spec);

struct SeparationBounds {
    double x_upper = 0.0; // (mun-mu2)/(2 mun) * n, upper bound on |X|
    double s_lower = 0.0; // 2 mu2/(mun-mu2) * |X|, lower bound on |S|; +inf when degenerate
    bool holds_x_upper = false;
    bool holds_s_lower = false;
    bool x_upper_equality = false; // |X| meets its bound within tolerance
    bool s_lower_equality = false; // |S| meets its bound within tolerance
    bool sizes_equal = false;      // |X| == |Y|, necessary for either equality
    bool degenerate = false;       // mun == mu2, s_lower reported as +inf
};

// Bounds derived from the separation inequality. Requires at least one edge.
SeparationBounds separation_bounds(const Graph& g, const SeparationTriple& triple,
                                   const SpectralSummary& spec);

struct TripleSweepStats {
    long long triples = 0; // valid triples examined (unordered in X, Y)
    long long separation_failures = 0;
    long long x_upper_failures = 0;
    long long s_lower_failures = 0;
    long long x_upper_equalities = 0;
    long long s_lower_equalities = 0;
    long long unbalanced_equalities = 0; // equality within tolerance but |X| != |Y|
};

// Checks every valid (S, X, Y) triple of g against the separation inequality
// and both derived bounds. jobs == 1 runs the serial reference loop; other
// values use the parallel kernel with identical results.
TripleSweepStats sweep_separation_triples(const Graph& g, const SpectralSummary& spec,
                                          int jobs = 1);

} // namespace lapmatch
