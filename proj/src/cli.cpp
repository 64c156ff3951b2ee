#include "lapmatch/cli.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lapmatch/enumerate.hpp"
#include "lapmatch/errors.hpp"
#include "lapmatch/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapmatch {

int exit_code_for(long long counterexample_total, bool had_errors) {
    if (had_errors) return 1;
    return counterexample_total > 0 ? 2 : 0;
}

namespace {

struct CorpusEntry {
    std::optional<Graph> graph;
    std::string source;  // "path:line" for diagnostics
    long long line = 0;  // 1-based line within its file
    std::string error;   // parse failure message when graph is absent
};

bool looks_like_edge_list(const std::string& text) {
    for (char c : text) {
        if (c == '\n') return false; // first line ended without a space
        if (c == ' ' || c == '\t') return true;
    }
    return false;
}

std::vector<CorpusEntry> load_input_files(const std::vector<std::string>& paths) {
    std::vector<CorpusEntry> entries;
    for (const std::string& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw precondition_error("cannot open input file: " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();

        if (looks_like_edge_list(text)) {
            CorpusEntry entry;
            entry.source = path + ":1";
            entry.line = 1;
            try {
                entry.graph = parse_edge_list(text);
            } catch (const std::exception& e) {
                entry.error = entry.source + ": " + e.what();
            }
            entries.push_back(std::move(entry));
            continue;
        }

        std::istringstream lines(text);
        std::string line;
        long long line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty()) continue;
            CorpusEntry entry;
            entry.source = path + ":" + std::to_string(line_no);
            entry.line = line_no;
            try {
                entry.graph = parse_graph6(line);
            } catch (const std::exception& e) {
                entry.error = entry.source + ": " + e.what();
            }
            entries.push_back(std::move(entry));
        }
    }
    return entries;
}

int parse_int(const std::string& token, const std::string& what) {
    try {
        size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw precondition_error("invalid " + what + ": '" + token + "'");
    }
}

double parse_double(const std::string& token, const std::string& what) {
    try {
        size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw precondition_error("invalid " + what + ": '" + token + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) out.push_back(token);
    return out;
}

Graph parse_block(const std::string& name) {
    if (name == "triangle") return make_complete(3);
    if (name.rfind("complete", 0) == 0)
        return make_complete(parse_int(name.substr(8), "block size"));
    if (name.rfind("cycle", 0) == 0) return make_cycle(parse_int(name.substr(5), "block size"));
    throw precondition_error("unknown dumbbell block: '" + name + "'");
}

std::vector<Graph> build_family(const std::string& spec, std::optional<std::uint64_t> seed,
                                int jobs) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::vector<std::string> args =
        colon == std::string::npos ? std::vector<std::string>{} : split(spec.substr(colon + 1), ',');
    const auto want = [&](size_t count) {
        if (args.size() != count)
            throw precondition_error("family '" + name + "' takes " + std::to_string(count) +
                                     " parameter(s)");
    };

    if (name == "complete") {
        want(1);
        return {make_complete(parse_int(args[0], "family parameter"))};
    }
    if (name == "path") {
        want(1);
        return {make_path(parse_int(args[0], "family parameter"))};
    }
    if (name == "cycle") {
        want(1);
        return {make_cycle(parse_int(args[0], "family parameter"))};
    }
    if (name == "star") {
        want(1);
        return {make_star(parse_int(args[0], "family parameter"))};
    }
    if (name == "bipartite") {
        want(2);
        return {make_complete_bipartite(parse_int(args[0], "family parameter"),
                                        parse_int(args[1], "family parameter"))};
    }
    if (name == "join") {
        want(2);
        return {make_join_clique_independent(parse_int(args[0], "family parameter"),
                                             parse_int(args[1], "family parameter"))};
    }
    if (name == "dumbbell") {
        want(2);
        return {make_dumbbell(parse_block(args[0]), parse_block(args[1]))};
    }
    if (name == "random") {
        want(3);
        if (!seed) throw precondition_error("--seed is required for the random family");
        const int n = parse_int(args[0], "family parameter");
        const double p = parse_double(args[1], "family parameter");
        const int count = parse_int(args[2], "family parameter");
        if (count < 0) throw precondition_error("random family count must be nonnegative");
        std::vector<Graph> graphs;
        graphs.reserve(count);
        for (int i = 0; i < count; ++i) graphs.push_back(make_random(n, p, *seed + i));
        return graphs;
    }
    if (name == "enumerate") {
        if (args.empty() || args.size() > 2)
            throw precondition_error("family 'enumerate' takes 1 or 2 parameter(s)");
        const int n = parse_int(args[0], "family parameter");
        bool connected_only = true;
        if (args.size() == 2) {
            if (args[1] == "all")
                connected_only = false;
            else if (args[1] != "connected")
                throw precondition_error("enumerate mode must be 'connected' or 'all'");
        }
        return enumerate_graphs(n, connected_only, jobs);
    }
    throw precondition_error("unknown family: '" + name + "'");
}

std::vector<CorpusEntry> family_entries(const std::string& spec, std::optional<std::uint64_t> seed,
                                        int jobs) {
    std::vector<CorpusEntry> entries;
    long long line = 0;
    for (Graph& g : build_family(spec, seed, jobs)) {
        CorpusEntry entry;
        entry.graph = std::move(g);
        entry.source = spec + ":" + std::to_string(++line);
        entry.line = line;
        entries.push_back(std::move(entry));
    }
    return entries;
}

struct CapsConfig {
    EvenSubgraphCaps even;
    int tree_cap = 16;
};

CapsConfig parse_caps(const std::string& text) {
    CapsConfig caps;
    if (text.empty()) return caps;
    for (const std::string& token : split(text, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw precondition_error("caps entries must look like key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const int value = parse_int(token.substr(eq + 1), "caps value");
        if (key == "even_edges")
            caps.even.edge_limit = value;
        else if (key == "even_subsets")
            caps.even.vertex_limit = value;
        else if (key == "tree")
            caps.tree_cap = value;
        else
            throw precondition_error("unknown caps key: '" + key + "'");
    }
    return caps;
}

std::vector<TheoremId> parse_selection(const std::string& text) {
    if (text == "all") return all_theorems();
    std::vector<TheoremId> selection;
    for (const std::string& token : split(text, ',')) {
        if (token.empty()) continue;
        const auto id = theorem_from_string(token);
        if (!id) throw precondition_error("unknown theorem: '" + token + "'");
        selection.push_back(*id);
    }
    if (selection.empty()) throw precondition_error("empty theorem selection");
    return selection;
}

std::pair<int, int> parse_s_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int s = parse_int(text, "s range");
        return {s, s};
    }
    return {parse_int(text.substr(0, dots), "s range"),
            parse_int(text.substr(dots + 2), "s range")};
}

class OutputTarget {
  public:
    OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw precondition_error("cannot open output path: " + path);
        stream_ = &file_;
    }
    std::ostream& stream() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_;
};

// Runs fn(i) for every index, buffering one string per index. jobs == 1 is
// the serial reference path; parallel runs emit identical buffers.
template <typename Fn>
std::vector<std::string> buffered_rows(long long count, int jobs, Fn&& fn) {
    std::vector<std::string> rows(count);
    if (jobs == 1) {
        for (long long i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(jobs)
    for (long long i = 0; i < count; ++i) rows[i] = fn(i);
#else
    for (long long i = 0; i < count; ++i) rows[i] = fn(i);
#endif
    return rows;
}

int cmd_analyze(const std::vector<CorpusEntry>& entries, int jobs, std::ostream& out) {
    std::vector<char> row_failed(entries.size(), 0);
    std::vector<std::string> rows =
        buffered_rows(static_cast<long long>(entries.size()), jobs, [&](long long i) {
            const CorpusEntry& entry = entries[i];
            if (!entry.graph) {
                row_failed[i] = 1;
                return error_row(entry.line, entry.error).dump();
            }
            const Graph& g = *entry.graph;
            try {
                const SpectralSummary spec = spectrum(g);
                const MatchingCertificate cert = maximum_matching(g);
                const FactorCriticalVerdict factor = factor_critical(g);
                std::optional<BalloonReport> balloon;
                if (g.connected()) balloon = balloons(g);
                return analysis_row(i, g, spec, cert, factor, balloon ? &*balloon : nullptr)
                    .dump();
            } catch (const std::exception& e) {
                row_failed[i] = 1;
                return error_row(entry.line, entry.source + ": " + e.what()).dump();
            }
        });

    for (const std::string& row : rows) out << row << '\n';
    for (char f : row_failed)
        if (f) return 1;
    return 0;
}

struct VerifySlot {
    std::vector<std::string> rows;
    std::map<TheoremId, TheoremHuntStats> stats;
    bool error = false;
};

int cmd_verify(const std::vector<CorpusEntry>& entries, const std::vector<TheoremId>& selection,
               const HuntParams& params, int jobs, std::ostream& out) {
    std::vector<VerifySlot> slots(entries.size());
    const auto evaluate_entry = [&](long long i) {
        const CorpusEntry& entry = entries[i];
        VerifySlot& slot = slots[i];
        if (!entry.graph) {
            slot.rows.push_back(error_row(entry.line, entry.error).dump());
            slot.error = true;
            return std::string();
        }
        const Graph& g = *entry.graph;
        SpectralSummary spec;
        try {
            spec = spectrum(g);
        } catch (const convergence_error& e) {
            for (TheoremId id : selection) ++slot.stats[id].skipped[e.what()];
            return std::string();
        }
        SelectionOutcome outcome = evaluate_selection(g, spec, selection, params);
        for (const auto& [id, reasons] : outcome.skipped)
            for (const auto& [reason, count] : reasons) slot.stats[id].skipped[reason] += count;
        for (const TheoremVerdict& verdict : outcome.verdicts) {
            TheoremHuntStats& stats = slot.stats[verdict.id];
            ++stats.evaluations;
            if (verdict.hypothesis_holds)
                ++stats.hypothesis_holds;
            else
                ++stats.vacuous;
            if (verdict.counterexample) ++stats.counterexamples;
            slot.rows.push_back(verdict_row(i, g, verdict).dump());
        }
        return std::string();
    };
    buffered_rows(static_cast<long long>(entries.size()), jobs, evaluate_entry);

    HuntReport aggregate;
    for (TheoremId id : selection) aggregate.stats[id];
    bool failed = false;
    for (const VerifySlot& slot : slots) {
        failed = failed || slot.error;
        for (const auto& [id, stats] : slot.stats) {
            TheoremHuntStats& dst = aggregate.stats[id];
            dst.evaluations += stats.evaluations;
            dst.hypothesis_holds += stats.hypothesis_holds;
            dst.vacuous += stats.vacuous;
            dst.counterexamples += stats.counterexamples;
            aggregate.counterexample_total += stats.counterexamples;
            for (const auto& [reason, count] : stats.skipped) dst.skipped[reason] += count;
        }
    }
    for (const CorpusEntry& entry : entries)
        if (entry.graph) ++aggregate.graphs;

    for (const VerifySlot& slot : slots)
        for (const std::string& row : slot.rows) out << row << '\n';
    write_json_line(out, summary_row(aggregate));

    return exit_code_for(aggregate.counterexample_total, failed);
}

int cmd_hunt(const std::vector<CorpusEntry>& entries, const std::vector<TheoremId>& selection,
             const HuntParams& params, int jobs, std::ostream& out) {
    std::vector<Graph> corpus;
    std::vector<long long> input_index;
    bool failed = false;
    for (long long i = 0; i < static_cast<long long>(entries.size()); ++i) {
        const CorpusEntry& entry = entries[i];
        if (!entry.graph) {
            write_json_line(out, error_row(entry.line, entry.error));
            failed = true;
            continue;
        }
        corpus.push_back(*entry.graph);
        input_index.push_back(i);
    }

    HuntReport report = hunt_counterexamples(corpus, selection, params, jobs);
    for (CounterexampleRecord& record : report.counterexamples) {
        record.corpus_index = input_index[record.corpus_index];
        write_json_line(out, counterexample_row(record));
    }
    write_json_line(out, summary_row(report));

    return exit_code_for(report.counterexample_total, failed);
}

int cmd_sweep(TightnessKind kind, double r, double a, int s_lo, int s_hi,
              const std::string& format, const std::string& plot_path, int jobs,
              std::ostream& out) {
    const long long count = s_hi >= s_lo ? s_hi - s_lo + 1 : 0;
    std::vector<std::string> plot_lines(count);
    std::vector<std::string> rows =
        buffered_rows(count, jobs, [&](long long i) {
            const int s = s_lo + static_cast<int>(i);
            const TightnessGraph tg = make_tightness_family(r, s, a, kind);
            const SpectralSummary spec = spectrum(tg.graph);
            const long long alpha = maximum_matching(tg.graph).size;
            const double ratio = spec.mu2 / spec.mun;
            plot_lines[i] = std::to_string(s) + " " + format_csv_double(tg.r - ratio);
            if (format == "json") return sweep_row_json(tg, spec, alpha).dump();
            const int n = tg.graph.vertex_count();
            std::ostringstream row;
            row << s << ',' << tg.t << ',' << n << ',' << format_csv_double(spec.mu2) << ','
                << format_csv_double(spec.mun) << ',' << format_csv_double(ratio) << ',' << alpha
                << ',' << format_csv_double(tg.r * (n - 1)) << ','
                << format_csv_double(tg.r - ratio);
            return row.str();
        });

    if (format == "csv") out << "s,t,n,mu2,mun,ratio,alpha_prime,bound,gap\n";
    for (const std::string& row : rows) out << row << '\n';

    if (!plot_path.empty()) {
        std::ofstream plot(plot_path, std::ios::binary);
        if (!plot) throw precondition_error("cannot open plot output path: " + plot_path);
        for (const std::string& line : plot_lines) plot << line << '\n';
    }
    return 0;
}

int cmd_generate(const std::string& family, std::optional<std::uint64_t> seed, int jobs,
                 std::ostream& out) {
    for (const Graph& g : build_family(family, seed, jobs)) out << serialize_graph6(g) << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplacian spectra, matching and structural certificates, and spectral "
                 "sufficient-condition checks for simple graphs"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string family;
    std::string format = "json";
    std::string output_path;
    std::string plot_path;
    std::string theorems_text;
    std::string caps_text;
    std::string s_range_text;
    std::vector<double> r_grid;
    std::vector<int> k_grid;
    bool t5_max_r = false;
    double a_param = 0.0;
    int jobs = 1;
    std::uint64_t seed_value = 0;

    const auto add_corpus_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", inputs, "graph6 file (one graph per line) or edge-list file");
        cmd->add_option("--family", family,
                        "generated corpus: complete:N path:N cycle:N star:T bipartite:S,T "
                        "join:S,T dumbbell:BLOCK,BLOCK random:N,P,COUNT enumerate:N[,connected|all]");
        cmd->add_option("--jobs", jobs, "worker threads; 1 runs the serial reference path")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--output", output_path, "write the report here instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "spectral and structural report per graph");
    add_corpus_flags(analyze);
    CLI::Option* analyze_seed = analyze->add_option("--seed", seed_value, "seed for random families");
    analyze->add_option("--format", format)->check(CLI::IsMember({"json"}));

    const auto add_verify_flags = [&](CLI::App* cmd) {
        add_corpus_flags(cmd);
        cmd->add_option("--theorems", theorems_text,
                        "comma list of checks, or 'all': T2_perfect_matching T3_matching_bound "
                        "COR_matching_bound T4_factor_critical T5_balloons T6_even_subgraph "
                        "T7_spanning_tree (short prefixes T2..T7, COR accepted)")
            ->required();
        cmd->add_option("--r-grid", r_grid, "r values for the matching and balloon bounds")
            ->delimiter(',');
        cmd->add_option("--k-grid", k_grid, "degree bounds for the spanning-tree check")
            ->delimiter(',');
        cmd->add_flag("--t5-max-r", t5_max_r,
                      "run the balloon check at each graph's maximum valid r instead of --r-grid");
        cmd->add_option("--caps", caps_text,
                        "search caps, comma list of key=value: even_edges, even_subsets, tree");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json"}));
        return cmd->add_option("--seed", seed_value, "seed for random families");
    };

    CLI::App* verify = app.add_subcommand("verify", "verdict rows per graph, theorem, grid point");
    CLI::Option* verify_seed = add_verify_flags(verify);
    CLI::App* hunt =
        app.add_subcommand("hunt", "scan a corpus for counterexamples; summary plus records");
    CLI::Option* hunt_seed = add_verify_flags(hunt);

    CLI::App* sweep = app.add_subcommand("sweep", "tightness family table over a range of s");
    sweep->add_option("--family", family, "bipartite or join")
        ->required()
        ->check(CLI::IsMember({"bipartite", "join"}));
    sweep->add_option("--r-grid", r_grid, "the single target ratio r")->delimiter(',')->required();
    sweep->add_option("--a", a_param, "offset a > r steering t = ceil(((1-r)/r)s + a/r)")
        ->required();
    sweep->add_option("--s-range", s_range_text, "inclusive range LO..HI (or a single value)")
        ->required();
    sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--output", output_path, "write the table here instead of stdout");
    sweep->add_option("--plot-output", plot_path, "write two-column plot data (s, r - ratio)");
    sweep->add_option("--jobs", jobs, "worker threads; 1 runs the serial reference path")
        ->check(CLI::PositiveNumber);

    CLI::App* generate = app.add_subcommand("generate", "write a family as graph6 lines");
    generate->add_option("--family", family, "same grammar as the corpus --family")->required();
    CLI::Option* generate_seed =
        generate->add_option("--seed", seed_value, "seed for random families");
    generate->add_option("--output", output_path, "write graphs here instead of stdout");
    generate->add_option("--jobs", jobs, "worker threads; 1 runs the serial reference path")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        const auto seed_of = [&](const CLI::Option* opt) -> std::optional<std::uint64_t> {
            if (opt->count() == 0) return std::nullopt;
            return seed_value;
        };
        const auto corpus_of = [&](const CLI::Option* seed_opt) {
            if (inputs.empty() == family.empty())
                throw precondition_error("exactly one of --input and --family is required");
            return inputs.empty() ? family_entries(family, seed_of(seed_opt), jobs)
                                  : load_input_files(inputs);
        };

        if (analyze->parsed()) {
            OutputTarget target(output_path, out);
            return cmd_analyze(corpus_of(analyze_seed), jobs, target.stream());
        }
        if (verify->parsed() || hunt->parsed()) {
            const std::vector<TheoremId> selection = parse_selection(theorems_text);
            const CapsConfig caps = parse_caps(caps_text);
            HuntParams params;
            params.r_grid = r_grid;
            params.k_grid = k_grid;
            params.t5_max_valid_r = t5_max_r;
            params.even_caps = caps.even;
            params.tree_cap = caps.tree_cap;
            for (TheoremId id : selection) {
                const bool needs_r = id == TheoremId::T3_matching_bound ||
                                     (id == TheoremId::T5_balloons && !t5_max_r);
                if (needs_r && r_grid.empty())
                    throw precondition_error("--r-grid is required for " + theorem_name(id));
                if (id == TheoremId::T7_spanning_tree && k_grid.empty())
                    throw precondition_error("--k-grid is required for " + theorem_name(id));
            }
            const CLI::Option* seed_opt = verify->parsed() ? verify_seed : hunt_seed;
            const std::vector<CorpusEntry> entries = corpus_of(seed_opt);
            OutputTarget target(output_path, out);
            return verify->parsed() ? cmd_verify(entries, selection, params, jobs, target.stream())
                                    : cmd_hunt(entries, selection, params, jobs, target.stream());
        }
        if (sweep->parsed()) {
            if (r_grid.size() != 1)
                throw precondition_error("sweep takes exactly one r in --r-grid");
            const auto [lo, hi] = parse_s_range(s_range_text);
            const TightnessKind kind =
                family == "bipartite" ? TightnessKind::bipartite : TightnessKind::join;
            const std::string sweep_format =
                sweep->get_option("--format")->count() ? format : "csv";
            OutputTarget target(output_path, out);
            return cmd_sweep(kind, r_grid[0], a_param, lo, hi, sweep_format, plot_path, jobs,
                             target.stream());
        }
        if (generate->parsed()) {
            OutputTarget target(output_path, out);
            return cmd_generate(family, seed_of(generate_seed), jobs, target.stream());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command\n";
    return 1;
}

} // namespace lapmatch
