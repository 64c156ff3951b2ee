#include "lapmatch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "lapmatch/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapmatch {

const std::vector<TheoremId>& all_theorems() {
    static const std::vector<TheoremId> ids = {
        TheoremId::T2_perfect_matching, TheoremId::T3_matching_bound,
        TheoremId::COR_matching_bound,  TheoremId::T4_factor_critical,
        TheoremId::T5_balloons,         TheoremId::T6_even_subgraph,
        TheoremId::T7_spanning_tree,
    };
    return ids;
}

std::string theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T2_perfect_matching: return "T2_perfect_matching";
    case TheoremId::T3_matching_bound: return "T3_matching_bound";
    case TheoremId::COR_matching_bound: return "COR_matching_bound";
    case TheoremId::T4_factor_critical: return "T4_factor_critical";
    case TheoremId::T5_balloons: return "T5_balloons";
    case TheoremId::T6_even_subgraph: return "T6_even_subgraph";
    case TheoremId::T7_spanning_tree: return "T7_spanning_tree";
    }
    throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> theorem_from_string(const std::string& text) {
    for (TheoremId id : all_theorems()) {
        const std::string full = theorem_name(id);
        if (text == full) return id;
        const auto cut = full.find('_');
        if (text == full.substr(0, cut)) return id;
    }
    return std::nullopt;
}

bool conclusion_perfect_matching(const Graph& g) { return has_perfect_matching(g); }

bool conclusion_matching_at_least(const Graph& g, double threshold) {
    return static_cast<double>(maximum_matching(g).size) >= threshold - kSpectralTolerance;
}

bool conclusion_factor_critical(const Graph& g) { return factor_critical(g).is_factor_critical; }

bool conclusion_balloons_at_most(const Graph& g, long long bound) {
    return balloons(g).count <= bound;
}

bool conclusion_even_subgraph(const Graph& g, const EvenSubgraphCaps& caps) {
    return has_even_spanning_subgraph(g, caps).exists;
}

bool conclusion_spanning_tree(const Graph& g, int k, int vertex_cap) {
    return bounded_degree_spanning_tree(g, k, vertex_cap).exists;
}

long long ceil_with_tolerance(double x, double tol) {
    return static_cast<long long>(std::ceil(x - tol));
}

double max_balloon_r(const Graph& g) {
    const int delta = g.min_degree();
    return std::min(1.0 / 3.0, 1.0 / (delta + 1));
}

namespace {

// hypothesis comparisons always favor the hypothesis by the shared tolerance
bool at_least(double lhs, double rhs) { return lhs >= rhs - kSpectralTolerance; }

void require_edges(const Graph& g) {
    if (g.edge_count() == 0) throw precondition_error("graph has no edges");
}

TheoremVerdict make_verdict(TheoremId id, bool side_conditions, double lhs, double rhs) {
    TheoremVerdict v;
    v.id = id;
    v.hyp_lhs = lhs;
    v.hyp_rhs = rhs;
    v.margin = lhs - rhs;
    v.hypothesis_holds = side_conditions && at_least(lhs, rhs);
    return v;
}

void finish(TheoremVerdict& v, bool conclusion) {
    v.conclusion_holds = conclusion;
    v.counterexample = v.hypothesis_holds && !conclusion;
}

} // namespace

TheoremVerdict verify_perfect_matching(const Graph& g, const SpectralSummary& spec) {
    require_edges(g);
    const bool even_order = g.vertex_count() % 2 == 0;
    TheoremVerdict v =
        make_verdict(TheoremId::T2_perfect_matching, even_order, 2.0 * spec.mu2, spec.mun);
    v.matching = maximum_matching(g);
    finish(v, g.vertex_count() == 2 * v.matching->size);
    return v;
}

TheoremVerdict verify_matching_bound(const Graph& g, const SpectralSummary& spec, double r) {
    require_edges(g);
    if (!(r > 0.0) || r > 0.5 + 1e-12) throw precondition_error("r must lie in (0, 1/2]");
    TheoremVerdict v = make_verdict(TheoremId::T3_matching_bound, true, spec.mu2, r * spec.mun);
    v.params.r = r;
    const double threshold = r * (g.vertex_count() - 1);
    v.matching = maximum_matching(g);
    finish(v, static_cast<double>(v.matching->size) >= threshold - kSpectralTolerance);
    return v;
}

TheoremVerdict verify_matching_bound_unconditional(const Graph& g, const SpectralSummary& spec) {
    require_edges(g);
    TheoremVerdict v = make_verdict(TheoremId::COR_matching_bound, true, 0.0, 0.0);
    const int n = g.vertex_count();
    const long long bound =
        std::min(ceil_with_tolerance(spec.mu2 / spec.mun * (n - 1)), static_cast<long long>(n / 2));
    v.matching = maximum_matching(g);
    finish(v, static_cast<long long>(v.matching->size) >= bound);
    return v;
}

TheoremVerdict verify_factor_critical(const Graph& g, const SpectralSummary& spec) {
    require_edges(g);
    const bool odd_order = g.vertex_count() % 2 == 1;
    TheoremVerdict v =
        make_verdict(TheoremId::T4_factor_critical, odd_order, 2.0 * spec.mu2, spec.mun);
    v.factor = factor_critical(g);
    finish(v, v.factor->is_factor_critical);
    return v;
}

TheoremVerdict verify_balloon_bound(const Graph& g, const SpectralSummary& spec, double r) {
    if (!g.connected()) throw precondition_error("graph is disconnected");
    const int delta = g.min_degree();
    if (delta < 1) throw precondition_error("minimum degree is zero");
    if (!(r > 0.0) || r > max_balloon_r(g) + 1e-12)
        throw precondition_error("r must lie in (0, min{1/3, 1/(delta+1)}]");
    BalloonReport report = balloons(g);
    if (report.is_dumbbell) throw precondition_error("graph is a dumbbell");
    const double factor = delta >= 2 ? 1.0 - r - r * delta : 1.0 - 3.0 * r;
    TheoremVerdict v = make_verdict(TheoremId::T5_balloons, true, spec.mu2, factor * spec.mun);
    v.params.r = r;
    v.params.delta = delta;
    const long long bound = ceil_with_tolerance(r * g.vertex_count());
    finish(v, report.count <= bound);
    v.balloon = std::move(report);
    return v;
}

TheoremVerdict verify_even_subgraph(const Graph& g, const SpectralSummary& spec,
                                    const EvenSubgraphCaps& caps) {
    const int delta = g.min_degree();
    if (delta < 3) throw precondition_error("minimum degree below three");
    TheoremVerdict v =
        make_verdict(TheoremId::T6_even_subgraph, true, (delta - 1) * spec.mu2, spec.mun);
    v.params.delta = delta;
    v.even = has_even_spanning_subgraph(g, caps);
    finish(v, v.even->exists);
    return v;
}

TheoremVerdict verify_spanning_tree(const Graph& g, const SpectralSummary& spec, int k,
                                    int vertex_cap) {
    if (k < 3) throw precondition_error("k must be at least three");
    if (!g.connected()) throw precondition_error("graph is disconnected");
    if (g.vertex_count() < 2) throw precondition_error("graph has fewer than two vertices");
    TheoremVerdict v =
        make_verdict(TheoremId::T7_spanning_tree, true, (k - 1) * spec.mu2, spec.mun);
    v.params.k = k;
    v.tree = bounded_degree_spanning_tree(g, k, vertex_cap);
    finish(v, v.tree->exists);
    return v;
}

namespace {

int grid_size_of(TheoremId id, const HuntParams& params) {
    switch (id) {
    case TheoremId::T3_matching_bound:
        return static_cast<int>(params.r_grid.size());
    case TheoremId::T5_balloons:
        return params.t5_max_valid_r ? 1 : static_cast<int>(params.r_grid.size());
    case TheoremId::T7_spanning_tree:
        return static_cast<int>(params.k_grid.size());
    default:
        return 1;
    }
}

TheoremVerdict run_one(const Graph& g, const SpectralSummary& spec, TheoremId id, int slot,
                       const HuntParams& params) {
    switch (id) {
    case TheoremId::T2_perfect_matching:
        return verify_perfect_matching(g, spec);
    case TheoremId::T3_matching_bound:
        return verify_matching_bound(g, spec, params.r_grid[slot]);
    case TheoremId::COR_matching_bound:
        return verify_matching_bound_unconditional(g, spec);
    case TheoremId::T4_factor_critical:
        return verify_factor_critical(g, spec);
    case TheoremId::T5_balloons:
        return verify_balloon_bound(g, spec,
                                    params.t5_max_valid_r ? max_balloon_r(g) : params.r_grid[slot]);
    case TheoremId::T6_even_subgraph:
        return verify_even_subgraph(g, spec, params.even_caps);
    case TheoremId::T7_spanning_tree:
        return verify_spanning_tree(g, spec, params.k_grid[slot], params.tree_cap);
    }
    throw std::logic_error("unknown theorem id");
}

} // namespace

SelectionOutcome evaluate_selection(const Graph& g, const SpectralSummary& spec,
                                    const std::vector<TheoremId>& selection,
                                    const HuntParams& params) {
    SelectionOutcome out;
    for (TheoremId id : selection) {
        const int grid_size = grid_size_of(id, params);
        for (int slot = 0; slot < grid_size; ++slot) {
            try {
                out.verdicts.push_back(run_one(g, spec, id, slot, params));
            } catch (const precondition_error& e) {
                ++out.skipped[id][e.what()];
            }
        }
    }
    return out;
}

namespace {

struct IndexedRecord {
    long long corpus_index = 0;
    int verdict_pos = 0; // position in the graph's verdict list, a stable tiebreak
    CounterexampleRecord record;
};

std::string graph_text_of(const Graph& g) {
    return g.vertex_count() <= 62 ? serialize_graph6(g) : serialize_edge_list(g);
}

void merge_stats(std::map<TheoremId, TheoremHuntStats>& into,
                 const std::map<TheoremId, TheoremHuntStats>& from) {
    for (const auto& [id, stats] : from) {
        TheoremHuntStats& dst = into[id];
        dst.evaluations += stats.evaluations;
        dst.hypothesis_holds += stats.hypothesis_holds;
        dst.vacuous += stats.vacuous;
        dst.counterexamples += stats.counterexamples;
        for (const auto& [reason, count] : stats.skipped) dst.skipped[reason] += count;
    }
}

class HuntWorker {
  public:
    HuntWorker(const std::vector<TheoremId>& selection, const HuntParams& params)
        : selection_(selection), params_(params) {
        for (TheoremId id : selection_) stats_[id]; // fixed key set, merge order stable
    }

    void evaluate(const Graph& g, long long index) {
        SpectralSummary spec;
        try {
            spec = spectrum(g);
        } catch (const convergence_error& e) {
            for (TheoremId id : selection_) ++stats_[id].skipped[e.what()];
            return;
        }
        SelectionOutcome out = evaluate_selection(g, spec, selection_, params_);
        for (const auto& [id, reasons] : out.skipped)
            for (const auto& [reason, count] : reasons) stats_[id].skipped[reason] += count;
        for (int pos = 0; pos < static_cast<int>(out.verdicts.size()); ++pos) {
            TheoremVerdict& verdict = out.verdicts[pos];
            TheoremHuntStats& stats = stats_[verdict.id];
            ++stats.evaluations;
            if (verdict.hypothesis_holds)
                ++stats.hypothesis_holds;
            else
                ++stats.vacuous;
            if (!verdict.counterexample) continue;
            ++stats.counterexamples;
            IndexedRecord rec;
            rec.corpus_index = index;
            rec.verdict_pos = pos;
            rec.record.corpus_index = index;
            rec.record.graph_text = graph_text_of(g);
            rec.record.verdict = std::move(verdict);
            records_.push_back(std::move(rec));
        }
    }

    std::map<TheoremId, TheoremHuntStats>& stats() { return stats_; }
    std::vector<IndexedRecord>& records() { return records_; }

  private:
    const std::vector<TheoremId>& selection_;
    const HuntParams& params_;
    std::map<TheoremId, TheoremHuntStats> stats_;
    std::vector<IndexedRecord> records_;
};

} // namespace

HuntReport hunt_counterexamples(const std::vector<Graph>& corpus,
                                const std::vector<TheoremId>& selection, const HuntParams& params,
                                int jobs) {
    if (selection.empty()) throw precondition_error("empty theorem selection");
    if (jobs < 1) throw precondition_error("jobs must be positive");

    HuntReport report;
    report.graphs = static_cast<long long>(corpus.size());
    std::vector<IndexedRecord> records;

    if (jobs == 1) {
        HuntWorker worker(selection, params);
        for (long long i = 0; i < report.graphs; ++i) worker.evaluate(corpus[i], i);
        report.stats = std::move(worker.stats());
        records = std::move(worker.records());
    } else {
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs)
        {
            HuntWorker worker(selection, params);
#pragma omp for schedule(dynamic, 8) nowait
            for (long long i = 0; i < report.graphs; ++i) worker.evaluate(corpus[i], i);
#pragma omp critical
            {
                merge_stats(report.stats, worker.stats());
                records.insert(records.end(), std::make_move_iterator(worker.records().begin()),
                               std::make_move_iterator(worker.records().end()));
            }
        }
        std::sort(records.begin(), records.end(),
                  [](const IndexedRecord& a, const IndexedRecord& b) {
                      return std::tie(a.corpus_index, a.verdict_pos) <
                             std::tie(b.corpus_index, b.verdict_pos);
                  });
#else
        HuntWorker worker(selection, params);
        for (long long i = 0; i < report.graphs; ++i) worker.evaluate(corpus[i], i);
        report.stats = std::move(worker.stats());
        records = std::move(worker.records());
#endif
    }

    report.counterexamples.reserve(records.size());
    for (IndexedRecord& rec : records) report.counterexamples.push_back(std::move(rec.record));
    report.counterexample_total = static_cast<long long>(report.counterexamples.size());
    return report;
}

} // namespace lapmatch
