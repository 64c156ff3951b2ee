#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "lapmatch/matching.hpp"
#include "lapmatch/spectra.hpp"
#include "lapmatch/structure.hpp"
#include "lapmatch/verify.hpp"

namespace lapmatch {

// Insertion order is the emission order, so rows diff cleanly across runs.
using json = nlohmann::ordered_json;

json spectral_json(const SpectralSummary& spec);
json matching_json(const MatchingCertificate& cert);
json factor_json(const FactorCriticalVerdict& verdict);
json balloon_json(const BalloonReport& report);
json even_json(const EvenSubgraphResult& result);
json tree_json(const SpanningTreeResult& result);
json params_json(const VerifyParams& params);

// Shared body of verdict and counterexample rows: theorem_id, params, the
// hypothesis numbers, conclusion flags, and whichever certificate is engaged.
json verdict_json(const TheoremVerdict& verdict);

// Row builders. Every row carries a "type" discriminator and no timestamp.
json analysis_row(long long index, const Graph& g, const SpectralSummary& spec,
                  const MatchingCertificate& matching, const FactorCriticalVerdict& factor,
                  const BalloonReport* balloon_if_connected);
json verdict_row(long long index, const Graph& g, const TheoremVerdict& verdict);
json summary_row(const HuntReport& report);
json counterexample_row(const CounterexampleRecord& record);
json error_row(long long line, const std::string& message);
json sweep_row_json(const TightnessGraph& tg, const SpectralSummary& spec, long long alpha_prime);

void write_json_line(std::ostream& out, const json& row);

// 12 significant digits, '.' decimal point regardless of locale
std::string format_csv_double(double x);

} // namespace lapmatch
