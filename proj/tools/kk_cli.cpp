#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kk/binomial.hpp"
#include "kk/extremal.hpp"
#include "kk/graph.hpp"
#include "kk/graph_io.hpp"
#include "kk/search.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

kk::Count parse_count(const std::string& s) {
    try {
        kk::Count v(s);
        if (v < 0) throw std::invalid_argument("negative");
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a non-negative integer, got '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a non-negative integer, got '" + s + "'");
    }
}

// "N" or "A..B"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        std::uint64_t n = parse_u64(s);
        return {n, n};
    }
    return {parse_u64(s.substr(0, dots)), parse_u64(s.substr(dots + 2))};
}

void emit_graph(const kk::Graph& g, const std::string& out_path, bool dot) {
    std::ostringstream body;
    if (dot)
        kk::write_dot(body, g);
    else
        kk::write_graph(body, g);
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path, std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << body.str();
    }
}

void print_record(const kk::ExtremalRecord& rec) {
    std::cout << "r: " << rec.r << "\ns: " << rec.s << "\nx: " << rec.x
              << "\nbound: " << rec.bound << "\nbest: " << rec.best
              << "\nscope: " << rec.scope
              << "\nexhaustive_within_scope: " << (rec.exhaustive_within_scope ? "yes" : "no")
              << "\nwitness:\n";
    kk::write_graph(std::cout, rec.witness);
}

int run_verify(const std::string& which, const std::vector<std::string>& args) {
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw CLI::ValidationError("verify " + which + ": expected " + std::to_string(n) +
                                       " argument(s)");
    };
    if (which == "t2") {
        need(4);
        auto rep = kk::verify_bollobas(parse_u64(args[0]), parse_u64(args[1]), parse_u64(args[2]),
                                       parse_u64(args[3]));
        std::cout << (rep.pass ? "pass" : "FAIL") << ": " << rep.detail << '\n';
        return rep.pass ? kExitPass : kExitVerifyFail;
    }
    if (which == "t3") {
        need(5);
        auto rep = kk::verify_theorem3(parse_u64(args[0]), parse_u64(args[1]), parse_u64(args[2]),
                                       parse_u64(args[3]), parse_u64(args[4]));
        std::cout << (rep.pass ? "pass" : "FAIL") << ": " << rep.detail << '\n';
        return rep.pass ? kExitPass : kExitVerifyFail;
    }
    if (which == "t4") {
        need(3);
        auto rep = kk::verify_theorem4(parse_u64(args[0]), parse_u64(args[1]), parse_u64(args[2]));
        std::cout << (rep.pass ? "pass" : "FAIL") << ": " << rep.detail << '\n';
        return rep.pass ? kExitPass : kExitVerifyFail;
    }
    if (which == "plateau") {
        need(5);
        auto rep = kk::plateau_check(parse_u64(args[0]), parse_u64(args[1]), parse_u64(args[2]),
                                     parse_u64(args[3]), parse_u64(args[4]));
        std::cout << (rep.pass ? "pass" : "FAIL") << ": " << rep.detail << '\n';
        return rep.pass ? kExitPass : kExitVerifyFail;
    }
    if (which == "t5" || which == "t6" || which == "canon-x") {
        need(1);
        auto [lo, hi] = parse_range(args[0]);
        bool all = true;
        for (std::uint64_t n = lo; n <= hi; ++n) {
            bool ok = which == "t5"   ? kk::verify_identity_t5(n)
                      : which == "t6" ? kk::verify_identity_t6(n)
                                      : kk::verify_canonical_x(n);
            if (!ok) {
                all = false;
                std::cout << "FAIL at n=" << n << '\n';
            }
        }
        if (all) std::cout << "pass: n=" << lo << ".." << hi << '\n';
        return all ? kExitPass : kExitVerifyFail;
    }
    throw CLI::ValidationError("unknown verifier '" + which +
                               "' (expected t2|t3|t4|t5|t6|canon-x|plateau)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kruskal-Katona bounds, extremal graph families, and clique-count search"};
    app.require_subcommand(1);

    std::string arg_x, arg_file, arg_out, arg_pair = "3,5", arg_mode, arg_checkpoint;
    std::string arg_which, arg_family;
    std::vector<std::string> arg_params;
    std::uint64_t arg_r = 0, arg_s = 0, arg_nmin = 0, arg_nmax = 0, arg_vmax = 0;
    std::uint64_t arg_seed = 0, arg_iters = 1;
    bool flag_prune = false, flag_dot = false, flag_csv = false;

    auto* canon = app.add_subcommand("canon", "r-canonical (cascade) representation of x");
    canon->add_option("x", arg_x)->required();
    canon->add_option("r", arg_r)->required();

    auto* bound = app.add_subcommand("bound", "Kruskal-Katona bound [x]^r_s");
    bound->add_option("x", arg_x)->required();
    bound->add_option("r", arg_r)->required();
    bound->add_option("s", arg_s)->required();

    auto* count = app.add_subcommand("count", "count K_r subgraphs of a graph file");
    count->add_option("file", arg_file)->required();
    count->add_option("r", arg_r)->required();
    count->add_flag("--prune", flag_prune, "restrict to the (r-1)-core first");

    auto* construct = app.add_subcommand("construct", "build a graph family");
    construct->add_option("family", arg_family,
                          "complete | turan | apex | minus-star | minus-2edges")
        ->required();
    construct->add_option("params", arg_params, "family parameters");
    construct->add_option("--out", arg_out, "output file (default stdout)");
    construct->add_flag("--dot", flag_dot, "emit DOT instead of edge-list format");

    auto* table = app.add_subcommand("table", "gap table for T(n,n-2)");
    table->add_option("n_min", arg_nmin)->required();
    table->add_option("n_max", arg_nmax)->required();
    table->add_option("--pair", arg_pair, "clique pair, 3,4 or 3,5 (default 3,5)");
    table->add_flag("--csv", flag_csv, "CSV output");

    auto* verify = app.add_subcommand("verify", "verify a theorem instance or identity range");
    verify->add_option("which", arg_which, "t2|t3|t4|t5|t6|canon-x|plateau")->required();
    verify->add_option("params", arg_params, "verifier parameters");

    auto* conjecture = app.add_subcommand(
        "conjecture", "bracket k_4(k_3 <= x) for x = C(n,3)-2(n-2) with an exhaustive scan");
    conjecture->add_option("n", arg_nmin)->required();
    conjecture->add_option("v_max", arg_vmax)->required();

    auto* search = app.add_subcommand("search", "extremal value search k_s(k_r <= x)");
    search->add_option("mode", arg_mode, "exhaustive | heuristic")->required();
    search->add_option("v_max", arg_vmax)->required();
    search->add_option("r", arg_r)->required();
    search->add_option("s", arg_s)->required();
    search->add_option("x", arg_x)->required();
    search->add_option("--seed", arg_seed, "RNG seed (heuristic)");
    search->add_option("--iters", arg_iters, "restart count (heuristic)");
    search->add_option("--checkpoint", arg_checkpoint, "checkpoint file (exhaustive)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*canon) {
            std::cout << kk::to_string(kk::canonical_rep(parse_count(arg_x), arg_r)) << '\n';
        } else if (*bound) {
            std::cout << kk::kk_bound(parse_count(arg_x), arg_r, arg_s) << '\n';
        } else if (*count) {
            std::ifstream in(arg_file);
            if (!in) throw std::runtime_error("cannot open graph file: " + arg_file);
            kk::Graph g = kk::read_graph(in);
            if (flag_prune) {
                auto res = kk::prune_then_count(g, arg_r);
                std::cout << res.count << '\n';
                std::cerr << "core size: " << res.core_size << '\n';
            } else {
                std::cout << kk::count_cliques(g, arg_r) << '\n';
            }
        } else if (*construct) {
            auto need = [&](std::size_t n) {
                if (arg_params.size() != n)
                    throw CLI::ValidationError("construct " + arg_family + ": expected " +
                                               std::to_string(n) + " parameter(s)");
            };
            if (arg_family == "complete") {
                need(1);
                emit_graph(kk::complete_graph(parse_u64(arg_params[0])), arg_out, flag_dot);
            } else if (arg_family == "turan") {
                need(2);
                emit_graph(kk::turan_graph(parse_u64(arg_params[0]), parse_u64(arg_params[1])),
                           arg_out, flag_dot);
            } else if (arg_family == "apex") {
                if (arg_params.empty() || arg_params.size() > 2)
                    throw CLI::ValidationError("construct apex: expected n [a1,a2,...]");
                std::vector<std::size_t> att;
                if (arg_params.size() == 2) {
                    std::stringstream ss(arg_params[1]);
                    std::string item;
                    while (std::getline(ss, item, ',')) att.push_back(parse_u64(item));
                }
                emit_graph(kk::apex_construction(parse_u64(arg_params[0]), att), arg_out,
                           flag_dot);
            } else if (arg_family == "minus-star") {
                need(2);
                emit_graph(
                    kk::complete_minus_star(parse_u64(arg_params[0]), parse_u64(arg_params[1])),
                    arg_out, flag_dot);
            } else if (arg_family == "minus-2edges") {
                need(1);
                emit_graph(kk::complete_minus_two_disjoint_edges(parse_u64(arg_params[0])),
                           arg_out, flag_dot);
            } else {
                throw CLI::ValidationError("unknown family '" + arg_family + "'");
            }
        } else if (*table) {
            std::uint64_t s = 0;
            if (arg_pair == "3,5")
                s = 5;
            else if (arg_pair == "3,4")
                s = 4;
            else
                throw CLI::ValidationError("--pair must be 3,4 or 3,5");
            std::vector<kk::GapRow> rows;
            if (s == 5)
                rows = kk::table_section3(arg_nmin, arg_nmax);
            else
                rows = kk::gap_report(s, arg_nmin, arg_nmax).rows;
            if (flag_csv) {
                std::cout << kk::to_csv(rows, s);
            } else {
                std::cout << "n\tK3\tK" << s << "\tbound\tgap\n";
                for (const auto& row : rows)
                    std::cout << row.n << '\t' << row.x << '\t' << row.actual << '\t' << row.bound
                              << '\t' << row.gap << '\n';
            }
        } else if (*conjecture) {
            auto rep = kk::conjecture_check(arg_nmin, arg_vmax);
            std::cout << "n: " << rep.n << "\nx: " << rep.x << "\nbound: " << rep.bound
                      << "\nbracket: [" << rep.bound - 1 << ", " << rep.bound << "]"
                      << "\nbest_in_scope: " << rep.best_in_scope << "\nbound_attained_in_scope: "
                      << (rep.bound_attained_in_scope ? "yes" : "no") << "\nscope_sufficient: "
                      << (rep.scope_sufficient ? "yes" : "no (budget never binds at this v_max)")
                      << '\n';
        } else if (*verify) {
            return run_verify(arg_which, arg_params);
        } else if (*search) {
            if (arg_mode == "exhaustive") {
                print_record(
                    kk::exhaustive_extremal(arg_vmax, arg_r, arg_s, parse_count(arg_x),
                                            arg_checkpoint));
            } else if (arg_mode == "heuristic") {
                print_record(kk::heuristic_extremal(arg_vmax, arg_r, arg_s, parse_count(arg_x),
                                                    arg_seed, arg_iters));
            } else {
                throw CLI::ValidationError("mode must be exhaustive or heuristic");
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const kk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitPass;
}
