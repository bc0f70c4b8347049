#pragma once

/// @file
/// The `turan` command-line front end. run_cli is the whole program; the
/// executable in tools/ only forwards argv. Exit codes: 0 success, 1 a
/// negative domain result (copy found, check failed), 2 usage or I/O error.

#include "turan/algebra.hpp"
#include "turan/construct.hpp"
#include "turan/freeness.hpp"
#include "turan/io.hpp"
#include "turan/krawtchouk.hpp"
#include "turan/search.hpp"
#include "turan/shadow.hpp"
#include "turan/stability.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace turan {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    return in;
}

inline void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << text;
}

inline Hypergraph load_hypergraph(const std::string& path) {
    auto in = open_input(path);
    return read_hypergraph(in);
}

inline std::string format_real(double value) {
    std::ostringstream out;
    out << std::setprecision(15) << value;
    return out.str();
}

inline const char* yes_no(bool value) { return value ? "true" : "false"; }

/// Key/value report: "key<TAB>value" lines, or a header row plus one data
/// row in tab-separated mode.
class Report {
public:
    void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }

    void print(std::ostream& out, bool tsv) const {
        if (tsv) {
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                out << (i ? "\t" : "") << rows_[i].first;
            }
            out << '\n';
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                out << (i ? "\t" : "") << rows_[i].second;
            }
            out << '\n';
        } else {
            for (const auto& [key, value] : rows_) {
                out << key << '\t' << value << '\n';
            }
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

inline Side parse_side(const std::string& text) {
    if (text == "large") {
        return Side::large;
    }
    if (text == "small") {
        return Side::small;
    }
    throw UsageError("--side must be 'large' or 'small'");
}

}  // namespace cli

/// Runs one command. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli;

    CLI::App app{"Exact constructions and checks for Turan problems of expanded cliques", "turan"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned threads = 1;
    bool tsv = false;
    app.add_option("--threads", threads, "Upper bound on worker threads")->check(CLI::Range(1U, 1024U));
    app.add_flag("--tsv", tsv, "Tab-separated output with a header row");

    // kraw
    auto* kraw = app.add_subcommand("kraw", "Binary Krawtchouk polynomials");
    kraw->require_subcommand(1);
    std::int64_t km = 0, kn = 0, kx = 0, kk = 0;
    bool full_scan = false, all_shifts = false;
    auto* kraw_eval_cmd = kraw->add_subcommand("eval", "K_m^n(x) by the explicit sum");
    kraw_eval_cmd->add_option("--m", km)->required()->check(CLI::NonNegativeNumber);
    kraw_eval_cmd->add_option("--n", kn)->required()->check(CLI::NonNegativeNumber);
    kraw_eval_cmd->add_option("--x", kx)->required()->check(CLI::NonNegativeNumber);
    auto* kraw_row_cmd = kraw->add_subcommand("row", "K_0^n(x) .. K_n^n(x) from the generating function");
    kraw_row_cmd->add_option("--n", kn)->required()->check(CLI::NonNegativeNumber);
    kraw_row_cmd->add_option("--x", kx)->required()->check(CLI::NonNegativeNumber);
    auto* kraw_tstar_cmd = kraw->add_subcommand("tstar", "Shifts 2t maximizing the parity construction");
    kraw_tstar_cmd->add_option("--n", kn)->required()->check(CLI::NonNegativeNumber);
    kraw_tstar_cmd->add_option("--k", kk)->required()->check(CLI::PositiveNumber);
    kraw_tstar_cmd->add_flag("--full-scan", full_scan, "Scan every feasible shift and confirm the window");
    kraw_tstar_cmd->add_flag("--all", all_shifts, "Print every maximizer, not only the smallest");

    // construct
    auto* construct = app.add_subcommand("construct", "Build an extremal construction");
    construct->require_subcommand(1);
    int cn = 0, ck = 0, cp = 0;
    std::int64_t two_t = 0;
    bool allow_remainder = false;
    std::string out_path;
    auto* parity_cmd = construct->add_subcommand("parity", "Odd-intersection bipartition hypergraph");
    parity_cmd->add_option("--n", cn)->required()->check(CLI::Range(0, kMaxVertices));
    parity_cmd->add_option("--k", ck)->required()->check(CLI::Range(1, 32));
    parity_cmd->add_option("--two-t", two_t)->required();
    parity_cmd->add_option("--out", out_path, "Write to a file instead of stdout");
    auto* sidorenko_cmd = construct->add_subcommand("sidorenko", "GF(2)^p-labelled hypergraph");
    sidorenko_cmd->add_option("--n", cn)->required()->check(CLI::Range(0, kMaxVertices));
    sidorenko_cmd->add_option("--k", ck)->required()->check(CLI::Range(1, 32));
    sidorenko_cmd->add_option("--p", cp)->required()->check(CLI::Range(0, 20));
    sidorenko_cmd->add_flag("--allow-remainder", allow_remainder,
                            "Spread n mod 2^p extra vertices over the first blocks");
    sidorenko_cmd->add_option("--out", out_path, "Write to a file instead of stdout");

    // count
    auto* count = app.add_subcommand("count", "Closed-form counts for the parity construction");
    count->require_subcommand(1);
    std::int64_t nn = 0, nk = 0;
    std::string side_text = "large";
    auto* count_b_cmd = count->add_subcommand("b", "Edge count b_2k(n,t)");
    count_b_cmd->add_option("--n", nn)->required()->check(CLI::NonNegativeNumber);
    count_b_cmd->add_option("--k", nk)->required()->check(CLI::PositiveNumber);
    count_b_cmd->add_option("--two-t", two_t)->required();
    auto* count_d_cmd = count->add_subcommand("d", "Vertex degree d_2k(n,+-t)");
    count_d_cmd->add_option("--n", nn)->required()->check(CLI::NonNegativeNumber);
    count_d_cmd->add_option("--k", nk)->required()->check(CLI::PositiveNumber);
    count_d_cmd->add_option("--two-t", two_t)->required();
    count_d_cmd->add_option("--side", side_text, "large (n/2+t part) or small (n/2-t part)")
        ->check(CLI::IsMember({"large", "small"}));

    // check
    auto* check = app.add_subcommand("check", "Freeness and maximality of a hypergraph");
    check->require_subcommand(1);
    std::string file;
    int r = 3;
    bool witness = false;
    auto* free_cmd = check->add_subcommand("free", "Exit 0 if free of the r-part expansion, 1 if a copy exists");
    free_cmd->add_option("--file", file)->required();
    free_cmd->add_option("--r", r)->required()->check(CLI::Range(2, 64));
    free_cmd->add_flag("--witness", witness, "Print the copy, one part per line");
    auto* maximal_cmd = check->add_subcommand("maximal", "Exit 0 if free and no non-edge can be added");
    maximal_cmd->add_option("--file", file)->required();
    maximal_cmd->add_option("--r", r)->required()->check(CLI::Range(2, 64));

    // color
    auto* color = app.add_subcommand("color", "Edge colorings of complete graphs");
    color->require_subcommand(1);
    int gp = 1;
    auto* color_gen_cmd = color->add_subcommand("gen", "Coloring of K_{2^p} by u xor v");
    color_gen_cmd->add_option("--p", gp)->required()->check(CLI::Range(1, 12));
    color_gen_cmd->add_option("--out", out_path, "Write to a file instead of stdout");
    auto* color_verify_cmd = color->add_subcommand("verify", "Check the matching and 4-set conditions");
    color_verify_cmd->add_option("--file", file)->required();
    auto* color_group_cmd = color->add_subcommand("group", "Build and certify the color group");
    color_group_cmd->add_option("--file", file)->required();

    // shadow
    auto* shadow = app.add_subcommand("shadow", "Shadow size against the real Kruskal-Katona bound");
    shadow->add_option("--file", file)->required();

    // stability
    auto* stability = app.add_subcommand("stability", "Partitions of near-extremal structures");
    stability->require_subcommand(1);
    std::string partition_path, graph_path;
    int parts = 2;
    auto* census_cmd = stability->add_subcommand("census", "Good/bad tuple census against a partition");
    census_cmd->add_option("--file", file)->required();
    census_cmd->add_option("--partition", partition_path)->required();
    bool force = false;
    census_cmd->add_flag("--force", force, "Allow n above the enumeration cap");
    auto* improve_cmd = stability->add_subcommand("improve", "Vertex-move local search");
    improve_cmd->add_option("--file", file)->required();
    improve_cmd->add_option("--partition", partition_path)->required();
    auto* simonovits_cmd = stability->add_subcommand("simonovits", "Partition a K_{s+1}-free graph");
    simonovits_cmd->add_option("--graph", graph_path)->required();
    simonovits_cmd->add_option("--s", parts)->required()->check(CLI::Range(1, 64));

    // search
    auto* search = app.add_subcommand("search", "Exact Turan numbers by branch and bound");
    search->require_subcommand(1);
    int sn = 0;
    int cap = SearchOptions{}.cap;
    std::uint64_t max_nodes = 0;
    std::string witness_path;
    auto* exact_cmd = search->add_subcommand("exact", "ex(n, C_3^(4)) with an optimality proof");
    exact_cmd->add_option("--n", sn)->required()->check(CLI::Range(0, 64));
    exact_cmd->add_option("--cap", cap, "Largest n accepted (default 8)")->check(CLI::Range(0, 64));
    exact_cmd->add_option("--max-nodes", max_nodes, "Give up the proof after this many nodes");
    exact_cmd->add_option("--witness", witness_path, "Write the extremal hypergraph here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            out << text;
        } else {
            write_text(out_path, text);
        }
    };

    try {
        if (*kraw_eval_cmd) {
            const ExactInteger value = kraw_eval(km, kn, kx);
            if (tsv) {
                out << "m\tn\tx\tvalue\n" << km << '\t' << kn << '\t' << kx << '\t' << value << '\n';
            } else {
                out << value << '\n';
            }
        } else if (*kraw_row_cmd) {
            const auto row = kraw_genfunc_row(kn, kx);
            if (tsv) {
                out << "m\tvalue\n";
            }
            for (std::size_t m = 0; m < row.size(); ++m) {
                if (tsv) {
                    out << m << '\t';
                }
                out << row[m] << '\n';
            }
        } else if (*kraw_tstar_cmd) {
            const OptimalShiftReport report = optimal_shift(kn, kk, full_scan);
            std::vector<ShiftValue> shown = report.maximizers;
            if (!all_shifts) {
                shown.resize(1);
            }
            if (tsv) {
                out << "two_t\tmax_edges\n";
                for (ShiftValue s : shown) {
                    out << s.twoT << '\t' << report.max_edges << '\n';
                }
            } else {
                for (ShiftValue s : shown) {
                    out << s.twoT << '\n';
                }
                out << report.max_edges << '\n';
            }
            if (!report.window_confirmed) {
                err << "warning: a maximizer lies outside the Levenshtein window\n";
                return kNegative;
            }
        } else if (*parity_cmd) {
            emit(format_hypergraph(build_parity(cn, ck, ShiftValue{two_t}).hypergraph));
        } else if (*sidorenko_cmd) {
            emit(format_hypergraph(build_sidorenko(cn, ck, cp, allow_remainder).hypergraph));
        } else if (*count_b_cmd) {
            const ExactInteger value = b_count(nn, nk, ShiftValue{two_t});
            if (tsv) {
                out << "n\tk\ttwo_t\tvalue\n" << nn << '\t' << nk << '\t' << two_t << '\t' << value << '\n';
            } else {
                out << value << '\n';
            }
        } else if (*count_d_cmd) {
            const ExactInteger value = degree_count(nn, nk, ShiftValue{two_t}, parse_side(side_text));
            if (tsv) {
                out << "n\tk\ttwo_t\tside\tvalue\n"
                    << nn << '\t' << nk << '\t' << two_t << '\t' << side_text << '\t' << value << '\n';
            } else {
                out << value << '\n';
            }
        } else if (*free_cmd) {
            const Hypergraph h = load_hypergraph(file);
            FreenessOptions options;
            options.threads = threads;
            const auto copy = find_expansion(h, r, options);
            Report report;
            report.add("result", copy ? "copy" : "free");
            report.print(out, tsv);
            if (copy && witness) {
                for (const KSubset& part : copy->parts) {
                    const auto v = part.indices();
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        out << (i ? " " : "") << v[i];
                    }
                    out << '\n';
                }
            }
            return copy ? kNegative : kOk;
        } else if (*maximal_cmd) {
            const Hypergraph h = load_hypergraph(file);
            FreenessOptions options;
            options.threads = threads;
            const auto extension = find_free_extension(h, r, options);
            Report report;
            report.add("result", extension ? "not-maximal" : "maximal");
            if (extension) {
                std::ostringstream set;
                const auto v = KSubset{*extension}.indices();
                for (std::size_t i = 0; i < v.size(); ++i) {
                    set << (i ? " " : "") << v[i];
                }
                report.add("addable", set.str());
            }
            report.print(out, tsv);
            return extension ? kNegative : kOk;
        } else if (*color_gen_cmd) {
            std::ostringstream text;
            write_coloring(text, generate_gf2_coloring(gp));
            emit(text.str());
        } else if (*color_verify_cmd) {
            auto in = open_input(file);
            const ColoringReport check_report = verify_coloring(read_coloring(in));
            Report report;
            report.add("full_coloring", yes_no(check_report.is_full_coloring));
            report.add("perfect_matchings", yes_no(check_report.every_color_perfect_matching));
            report.add("four_set_condition", yes_no(check_report.four_set_condition));
            std::string violation = "none";
            if (check_report.first_violation) {
                const auto& v = *check_report.first_violation;
                violation = std::to_string(v[0]) + " " + std::to_string(v[1]) + " " +
                            std::to_string(v[2]) + " " + std::to_string(v[3]);
            }
            report.add("first_violation", violation);
            report.print(out, tsv);
            return check_report.passes() ? kOk : kNegative;
        } else if (*color_group_cmd) {
            auto in = open_input(file);
            const EdgeColoring coloring = read_coloring(in);
            ColorGroup group;
            try {
                group = build_group(coloring);
            } catch (const std::invalid_argument& e) {
                err << "error: " << e.what() << '\n';
                return kNegative;
            } catch (const GroupError& e) {
                err << "error: " << e.what() << '\n';
                return kNegative;
            }
            Report report;
            report.add("order", std::to_string(group.order));
            report.add("dimension", std::to_string(group.dimension));
            report.print(out, tsv);
            for (int a = 0; a < group.order; ++a) {
                for (int b = 0; b < group.order; ++b) {
                    out << (b ? " " : "") << group.add(a, b);
                }
                out << '\n';
            }
        } else if (*shadow) {
            auto in = open_input(file);
            const LovaszReport lovasz = check_lovasz_bound(read_family(in));
            Report report;
            report.add("x", format_real(lovasz.x));
            report.add("bound", format_real(lovasz.bound));
            report.add("shadow_size", std::to_string(lovasz.shadow_size));
            report.add("holds", yes_no(lovasz.holds));
            report.print(out, tsv);
            return lovasz.holds ? kOk : kNegative;
        } else if (*census_cmd || *improve_cmd) {
            const Hypergraph h = load_hypergraph(file);
            auto in = open_input(partition_path);
            const Bipartition start = read_partition(in);
            if (*census_cmd) {
                CensusOptions options;
                options.force = force;
                const TupleCensus census = classify_tuples(h, start, options);
                Report report;
                report.add("good_edges", to_decimal(census.good_edges));
                report.add("bad_edges", to_decimal(census.bad_edges));
                report.add("good_non_edges", to_decimal(census.good_non_edges));
                report.add("bad_non_edges", to_decimal(census.bad_non_edges));
                report.add("correct", to_decimal(census.correct()));
                report.add("incorrect", to_decimal(census.incorrect()));
                report.print(out, tsv);
            } else {
                const ImprovementRun run = improve_partition(h, start);
                out << "# moves " << run.moves.size() << '\n';
                out << "# bad_edges " << run.bad_edge_trace.front() << " -> " << run.bad_edge_trace.back()
                    << '\n';
                write_partition(out, run.partition);
            }
        } else if (*simonovits_cmd) {
            auto in = open_input(graph_path);
            const SimonovitsResult result = simonovits_partition(read_graph(in), parts);
            std::ostringstream deleted;
            for (std::size_t i = 0; i < result.deleted.size(); ++i) {
                deleted << (i ? " " : "") << result.deleted[i];
            }
            Report report;
            report.add("internal_edges", std::to_string(result.internal_edges));
            report.add("c", format_real(result.c.convert_to<double>()));
            report.add("density_hypothesis", yes_no(result.density_hypothesis));
            report.add("theorem_bound", format_real(result.theorem_bound));
            report.add("within_theorem_bound", yes_no(result.within_theorem_bound));
            report.add("deleted", result.deleted.empty() ? "none" : deleted.str());
            report.add("leftovers", std::to_string(result.leftovers.size()));
            report.add("hypothesis_failure", yes_no(result.hypothesis_failure));
            report.add("note", result.note.empty() ? "none" : result.note);
            report.print(out, tsv);
            out << "# deletion uses degree < (1-1/s-2 sqrt c) m; leftover and deleted vertices join "
                   "the smallest part (ties: lowest index)\n";
            for (std::size_t v = 0; v < result.part_of.size(); ++v) {
                out << "u " << v << ' ' << result.part_of[v] << '\n';
            }
            return result.hypothesis_failure ? kNegative : kOk;
        } else if (*exact_cmd) {
            SearchOptions options;
            options.cap = cap;
            options.threads = threads;
            options.max_nodes = max_nodes;
            if (cap > SearchOptions{}.cap && sn > SearchOptions{}.cap) {
                err << "warning: n=" << sn << " is above the default cap; the search may take a long time\n";
            }
            const SearchResult result = exact_turan(sn, options);
            Report report;
            report.add("value", to_decimal(result.value));
            report.add("nodes", std::to_string(result.nodes));
            report.add("optimal", yes_no(result.proof_of_optimality));
            report.add("parity_bound", sn >= 4 ? std::to_string(lower_bound_construction(sn).edge_count())
                                                : std::string("0"));
            report.print(out, tsv);
            if (!witness_path.empty()) {
                write_text(witness_path, format_hypergraph(result.witness));
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kOk;
}

}  // namespace turan
