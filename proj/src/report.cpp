#include "lapmatch/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace lapmatch {

namespace {

json edge_array(const std::vector<std::pair<int, int>>& edges) {
    json arr = json::array();
    for (const auto& [u, v] : edges) arr.push_back(json::array({u, v}));
    return arr;
}

json int_array(const std::vector<int>& values) {
    json arr = json::array();
    for (int v : values) arr.push_back(v);
    return arr;
}

json number_or_null(double x) {
    if (std::isnan(x)) return nullptr;
    return x;
}

json graph6_or_null(const Graph& g) {
    if (g.vertex_count() > 62) return nullptr;
    return serialize_graph6(g);
}

} // namespace

json spectral_json(const SpectralSummary& spec) {
    json j;
    j["eigenvalues"] = spec.eigenvalues;
    j["mu2"] = number_or_null(spec.mu2);
    j["mun"] = spec.mun;
    j["residual"] = spec.residual;
    j["tolerance"] = spec.tolerance;
    return j;
}

json matching_json(const MatchingCertificate& cert) {
    json j;
    j["edges"] = edge_array(cert.matching);
    j["size"] = cert.size;
    j["witness_s"] = int_array(cert.witness_s);
    j["deficiency"] = cert.deficiency;
    return j;
}

json factor_json(const FactorCriticalVerdict& verdict) {
    json j;
    j["is_factor_critical"] = verdict.is_factor_critical;
    if (verdict.failing_vertex) j["failing_vertex"] = *verdict.failing_vertex;
    if (verdict.gallai_witness) j["refuting_set"] = int_array(*verdict.gallai_witness);
    return j;
}

json balloon_json(const BalloonReport& report) {
    json j;
    j["count"] = report.count;
    j["is_dumbbell"] = report.is_dumbbell;
    json list = json::array();
    for (const auto& b : report.balloons) list.push_back(int_array(b));
    j["balloons"] = std::move(list);
    j["bridge_of"] = edge_array(report.bridge_of);
    return j;
}

json even_json(const EvenSubgraphResult& result) {
    json j;
    j["exists"] = result.exists;
    if (result.subgraph) j["subgraph"] = edge_array(*result.subgraph);
    if (result.refuting_set) j["refuting_set"] = int_array(*result.refuting_set);
    return j;
}

json tree_json(const SpanningTreeResult& result) {
    json j;
    j["exists"] = result.exists;
    if (result.tree) j["tree"] = edge_array(*result.tree);
    if (result.violating_set) j["violating_set"] = int_array(*result.violating_set);
    return j;
}

json params_json(const VerifyParams& params) {
    json j = json::object();
    if (params.r) j["r"] = *params.r;
    if (params.k) j["k"] = *params.k;
    if (params.delta) j["delta"] = *params.delta;
    return j;
}

json verdict_json(const TheoremVerdict& verdict) {
    json j;
    j["theorem_id"] = theorem_name(verdict.id);
    j["params"] = params_json(verdict.params);
    j["hypothesis_holds"] = verdict.hypothesis_holds;
    j["hyp_lhs"] = verdict.hyp_lhs;
    j["hyp_rhs"] = verdict.hyp_rhs;
    j["margin"] = verdict.margin;
    j["conclusion_holds"] = verdict.conclusion_holds;
    j["counterexample"] = verdict.counterexample;
    json cert;
    if (verdict.matching)
        cert = matching_json(*verdict.matching);
    else if (verdict.factor)
        cert = factor_json(*verdict.factor);
    else if (verdict.balloon)
        cert = balloon_json(*verdict.balloon);
    else if (verdict.even)
        cert = even_json(*verdict.even);
    else if (verdict.tree)
        cert = tree_json(*verdict.tree);
    else
        cert = nullptr;
    j["conclusion_certificate"] = std::move(cert);
    return j;
}

json analysis_row(long long index, const Graph& g, const SpectralSummary& spec,
                  const MatchingCertificate& matching, const FactorCriticalVerdict& factor,
                  const BalloonReport* balloon_if_connected) {
    json j;
    j["type"] = "analysis";
    j["index"] = index;
    j["graph6"] = graph6_or_null(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["connected"] = g.connected();
    j["mu2"] = number_or_null(spec.mu2);
    j["mun"] = spec.mun;
    j["alpha_prime"] = matching.size;
    j["spectral"] = spectral_json(spec);
    j["matching"] = matching_json(matching);
    j["factor_critical"] = factor_json(factor);
    if (balloon_if_connected)
        j["balloons"] = balloon_json(*balloon_if_connected);
    else
        j["balloons_skipped"] = "graph is disconnected";
    return j;
}

json verdict_row(long long index, const Graph& g, const TheoremVerdict& verdict) {
    json j;
    j["type"] = "verdict";
    j["index"] = index;
    j["graph6"] = graph6_or_null(g);
    json body = verdict_json(verdict);
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    return j;
}

json summary_row(const HuntReport& report) {
    json j;
    j["type"] = "summary";
    j["graphs"] = report.graphs;
    j["counterexample_total"] = report.counterexample_total;
    json theorems = json::object();
    for (const auto& [id, stats] : report.stats) {
        json s;
        s["evaluations"] = stats.evaluations;
        s["hypothesis_holds"] = stats.hypothesis_holds;
        s["vacuous"] = stats.vacuous;
        s["counterexamples"] = stats.counterexamples;
        json skipped = json::object();
        for (const auto& [reason, count] : stats.skipped) skipped[reason] = count;
        s["skipped"] = std::move(skipped);
        theorems[theorem_name(id)] = std::move(s);
    }
    j["theorems"] = std::move(theorems);
    return j;
}

json counterexample_row(const CounterexampleRecord& record) {
    json j;
    j["type"] = "counterexample";
    j["index"] = record.corpus_index;
    j["graph"] = record.graph_text;
    json body = verdict_json(record.verdict);
    for (auto& [key, value] : body.items()) j[key] = std::move(value);
    return j;
}

json error_row(long long line, const std::string& message) {
    json j;
    j["type"] = "error";
    j["line"] = line;
    j["message"] = message;
    return j;
}

json sweep_row_json(const TightnessGraph& tg, const SpectralSummary& spec, long long alpha_prime) {
    const int n = tg.graph.vertex_count();
    const double ratio = spec.mu2 / spec.mun;
    json j;
    j["type"] = "sweep_row";
    j["kind"] = tg.kind == TightnessKind::bipartite ? "bipartite" : "join";
    j["s"] = tg.s;
    j["t"] = tg.t;
    j["n"] = n;
    j["mu2"] = spec.mu2;
    j["mun"] = spec.mun;
    j["ratio"] = ratio;
    j["alpha_prime"] = alpha_prime;
    j["bound"] = tg.r * (n - 1);
    j["gap"] = tg.r - ratio;
    return j;
}

void write_json_line(std::ostream& out, const json& row) { out << row.dump() << '\n'; }

std::string format_csv_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

} // namespace lapmatch
