#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lapmatch/graph.hpp"
#include "lapmatch/matching.hpp"
#include "lapmatch/spectra.hpp"
#include "lapmatch/structure.hpp"

namespace lapmatch {

// Report vocabulary for the implication checks; these strings appear verbatim
// in emitted reports and in --theorems selections.
enum class TheoremId {
    T2_perfect_matching,
    T3_matching_bound,
    COR_matching_bound,
    T4_factor_critical,
    T5_balloons,
    T6_even_subgraph,
    T7_spanning_tree,
};

const std::vector<TheoremId>& all_theorems();
std::string theorem_name(TheoremId id);
// Accepts the full name or its prefix up to the first underscore (T2, COR).
std::optional<TheoremId> theorem_from_string(const std::string& text);

struct VerifyParams {
    std::optional<double> r;
    std::optional<int> k;
    std::optional<int> delta;
};

struct TheoremVerdict {
    TheoremId id{};
    bool hypothesis_holds = false;
    double hyp_lhs = 0.0;
    double hyp_rhs = 0.0;
    double margin = 0.0; // hyp_lhs - hyp_rhs
    bool conclusion_holds = false;
    bool counterexample = false; // hypothesis_holds and not conclusion_holds
    VerifyParams params;
    // exactly one certificate engaged, depending on the check
    std::optional<MatchingCertificate> matching;
    std::optional<FactorCriticalVerdict> factor;
    std::optional<BalloonReport> balloon;
    std::optional<EvenSubgraphResult> even;
    std::optional<SpanningTreeResult> tree;
};

// Conclusion side. These take no spectral inputs: any threshold derived from
// eigenvalues is computed by the caller and passed as a plain number.
bool conclusion_perfect_matching(const Graph& g);
bool conclusion_matching_at_least(const Graph& g, double threshold);
bool conclusion_factor_critical(const Graph& g);
bool conclusion_balloons_at_most(const Graph& g, long long bound);
bool conclusion_even_subgraph(const Graph& g, const EvenSubgraphCaps& caps = {});
bool conclusion_spanning_tree(const Graph& g, int k, int vertex_cap = 16);

// ceil(x) robust against values sitting a rounding error above an integer
long long ceil_with_tolerance(double x, double tol = kSpectralTolerance);

TheoremVerdict verify_perfect_matching(const Graph& g, const SpectralSummary& spec);
TheoremVerdict verify_matching_bound(const Graph& g, const SpectralSummary& spec, double r);
TheoremVerdict verify_matching_bound_unconditional(const Graph& g, const SpectralSummary& spec);
TheoremVerdict verify_factor_critical(const Graph& g, const SpectralSummary& spec);
TheoremVerdict verify_balloon_bound(const Graph& g, const SpectralSummary& spec, double r);
TheoremVerdict verify_even_subgraph(const Graph& g, const SpectralSummary& spec,
                                    const EvenSubgraphCaps& caps = {});
TheoremVerdict verify_spanning_tree(const Graph& g, const SpectralSummary& spec, int k,
                                    int vertex_cap = 16);

// The largest r the balloon bound accepts for this graph: min{1/3, 1/(delta+1)}.
double max_balloon_r(const Graph& g);

struct HuntParams {
    std::vector<double> r_grid; // matching-bound grid; balloon grid unless max mode
    std::vector<int> k_grid;    // spanning-tree grid
    bool t5_max_valid_r = false; // balloon checks run at the per-graph maximum r only
    EvenSubgraphCaps even_caps;
    int tree_cap = 16;
};

// One graph evaluated against a selection at every applicable grid point.
// Verdicts appear in selection order, grid-major within a theorem; grid
// points whose preconditions fail land in skipped instead.
struct SelectionOutcome {
    std::vector<TheoremVerdict> verdicts;
    std::map<TheoremId, std::map<std::string, long long>> skipped;
};

SelectionOutcome evaluate_selection(const Graph& g, const SpectralSummary& spec,
                                    const std::vector<TheoremId>& selection,
                                    const HuntParams& params);

struct TheoremHuntStats {
    long long evaluations = 0;
    long long hypothesis_holds = 0;
    long long vacuous = 0; // hypothesis false, conclusion unchecked against it
    long long counterexamples = 0;
    std::map<std::string, long long> skipped; // precondition reason -> count
};

struct CounterexampleRecord {
    long long corpus_index = 0;
    std::string graph_text; // graph6 when n <= 62, edge list otherwise
    TheoremVerdict verdict;
};

struct HuntReport {
    long long graphs = 0;
    std::map<TheoremId, TheoremHuntStats> stats;
    std::vector<CounterexampleRecord> counterexamples;
    long long counterexample_total = 0;
};

// Runs every selected check over the corpus at every applicable grid point.
// Precondition violations are tallied as skips, never silently dropped.
// jobs == 1 is the serial reference path; other values fan out across graphs
// and merge in corpus order with identical results.
HuntReport hunt_counterexamples(const std::vector<Graph>& corpus,
                                const std::vector<TheoremId>& selection, const HuntParams& params,
                                int jobs = 1);

} // namespace lapmatch
