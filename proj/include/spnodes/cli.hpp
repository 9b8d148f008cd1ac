#pragma once

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spnodes/spnodes.hpp"

namespace spnodes::cli {

enum class Subcommand { Nodes, Lebesgue, LebesgueTable, InterpError, DiffMat, DiffError, Volterra };
enum class OutputFormat { Csv, Json };

struct RunConfig {
    Subcommand subcommand = Subcommand::Nodes;
    NodeFamily family = NodeFamily::CGL;
    int s = 8;
    std::string function_id;      // interp-error / diff-error
    std::string problem_id;       // volterra
    OutputFormat format = OutputFormat::Csv;
    std::string output;           // empty or "-" means stdout
    int grid = 2001;
    bool emit_function = false;   // lebesgue: emit the F(x) curve instead of the report
};

namespace detail {

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t j = 0; j < t.columns.size(); ++j)
        os << t.columns[j] << (j + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (const auto* i = std::get_if<long long>(&row[j])) os << *i;
            else if (const auto* d = std::get_if<double>(&row[j])) os << g17(*d);
            else os << std::get<std::string>(row[j]);
            os << (j + 1 < row.size() ? "," : "\n");
        }
    }
}

inline void write_json(std::ostream& os, const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (const auto* i = std::get_if<long long>(&row[j])) obj[t.columns[j]] = *i;
            else if (const auto* d = std::get_if<double>(&row[j])) obj[t.columns[j]] = *d;
            else obj[t.columns[j]] = std::get<std::string>(row[j]);
        }
        rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << "\n";
}

inline void emit(const RunConfig& cfg, const Table& t) {
    std::ofstream file;
    const bool to_stdout = cfg.output.empty() || cfg.output == "-";
    if (!to_stdout) {
        file.open(cfg.output, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output file: " + cfg.output);
    }
    std::ostream& os = to_stdout ? std::cout : file;
    if (cfg.format == OutputFormat::Csv) write_csv(os, t);
    else write_json(os, t);
    os.flush();
    if (!to_stdout && !file) throw std::runtime_error("write failed: " + cfg.output);
}

inline int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SPECTRAL_NODES_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw)) hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(std::min(hw, 64u));
}

inline Table run_nodes(const RunConfig& cfg) {
    const NodeSet ns = generate(cfg.family, cfg.s);
    Table t{{"i", "node"}, {}};
    for (int i = 0; i <= ns.s; ++i)
        t.rows.push_back({static_cast<long long>(i), ns.nodes[static_cast<std::size_t>(i)]});
    return t;
}

inline Table run_lebesgue(const RunConfig& cfg) {
    const NodeSet ns = generate(cfg.family, cfg.s);
    if (cfg.emit_function) {
        if (cfg.grid < 2) throw std::invalid_argument("--grid must be >= 2");
        const std::vector<double> w = barycentric_weights(ns.nodes);
        Table t{{"x", "F"}, {}};
        for (int k = 0; k < cfg.grid; ++k) {
            const double x = -1.0 + 2.0 * k / (cfg.grid - 1);
            t.rows.push_back({x, lebesgue_function(ns.nodes, w, x)});
        }
        return t;
    }
    const LebesgueReport r = lebesgue_constant(ns);
    Table t{{"family", "s", "max_F", "argmax", "lambda_paper", "lambda_conventional"}, {}};
    t.rows.push_back({std::string(family_name(r.family)), static_cast<long long>(r.s), r.max_F,
                      r.argmax, r.lambda_paper, r.lambda_conventional});
    return t;
}

inline Table run_lebesgue_table(const RunConfig&) {
    const NodeFamily fams[] = {NodeFamily::EquiSpaced, NodeFamily::CGL, NodeFamily::ScaledCheb};
    const int degrees[] = {6, 8, 10, 12, 14, 16, 18};
    struct CellJob { NodeFamily family; int s; };
    std::vector<CellJob> jobs;
    for (NodeFamily f : fams)
        for (int s : degrees) jobs.push_back({f, s});

    std::vector<LebesgueReport> reports(jobs.size());
    const int cap = thread_cap();
    if (cap <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k)
            reports[k] = lebesgue_constant(generate(jobs[k].family, jobs[k].s));
    } else {
        std::vector<std::future<void>> futs;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < cap; ++w)
            futs.push_back(std::async(std::launch::async, [&jobs, &reports, &next] {
                for (std::size_t k = next++; k < jobs.size(); k = next++)
                    reports[k] = lebesgue_constant(generate(jobs[k].family, jobs[k].s));
            }));
        for (auto& f : futs) f.get();
    }

    Table t{{"family", "s", "lambda_paper", "lambda_conventional"}, {}};
    for (std::size_t k = 0; k < jobs.size(); ++k)
        t.rows.push_back({std::string(family_name(jobs[k].family)), static_cast<long long>(jobs[k].s),
                          reports[k].lambda_paper, reports[k].lambda_conventional});
    return t;
}

inline Table run_interp_error(const RunConfig& cfg) {
    const NodeSet ns = generate(cfg.family, cfg.s);
    Table t{{"x", "abs_error"}, {}};
    for (const auto& [x, err] : interp_error_curve(ns, cfg.function_id, cfg.grid))
        t.rows.push_back({x, err});
    return t;
}

inline Table run_diffmat(const RunConfig& cfg) {
    const DiffMatrix d = build_general(generate(cfg.family, cfg.s));
    Table t{{"i", "j", "value"}, {}};
    for (int i = 0; i < d.entries.rows(); ++i)
        for (int j = 0; j < d.entries.cols(); ++j)
            t.rows.push_back({static_cast<long long>(i), static_cast<long long>(j), d.entries(i, j)});
    return t;
}

inline Table run_diff_error(const RunConfig& cfg) {
    Table t{{"i", "node", "abs_error"}, {}};
    long long i = 0;
    for (const auto& [x, err] : derivative_error_at_nodes(cfg.family, cfg.s, cfg.function_id))
        t.rows.push_back({i++, x, err});
    return t;
}

inline Table run_volterra(const RunConfig& cfg) {
    const VolterraBenchmark& bench = volterra_benchmark(cfg.problem_id);
    const VolterraProblem problem = make_benchmark_problem(bench, cfg.family, cfg.s);
    const VolterraSolution sol = solve(problem);
    if (sol.condition_estimate > 1e12)
        std::cerr << "warning: collocation matrix 1-norm condition estimate "
                  << g17(sol.condition_estimate) << " exceeds 1e12; nodal values may be unreliable\n";
    Table t{{"i", "node", "u_exact", "u_approx", "abs_error"}, {}};
    for (std::size_t i = 0; i < problem.nodes.nodes.size(); ++i) {
        const double ti = problem.nodes.nodes[i];
        const double ue = bench.exact(ti);
        t.rows.push_back({static_cast<long long>(i), ti, ue, sol.nodal_values[i],
                          std::fabs(ue - sol.nodal_values[i])});
    }
    return t;
}

}  // namespace detail

/// Execute a validated config. Exit code 0 on success, 2 on validation
/// errors, 1 on computational errors.
inline int run(const RunConfig& cfg) {
    try {
        detail::Table t;
        switch (cfg.subcommand) {
            case Subcommand::Nodes: t = detail::run_nodes(cfg); break;
            case Subcommand::Lebesgue: t = detail::run_lebesgue(cfg); break;
            case Subcommand::LebesgueTable: t = detail::run_lebesgue_table(cfg); break;
            case Subcommand::InterpError: t = detail::run_interp_error(cfg); break;
            case Subcommand::DiffMat: t = detail::run_diffmat(cfg); break;
            case Subcommand::DiffError: t = detail::run_diff_error(cfg); break;
            case Subcommand::Volterra: t = detail::run_volterra(cfg); break;
        }
        detail::emit(cfg, t);
        return 0;
    } catch (const ParityError& e) {
        std::cerr << "error: --family/--s: " << e.what() << "\n";
        return 2;
    } catch (const UnknownFunction& e) {
        std::cerr << "error: --function/--problem/--family: " << e.what() << "\n";
        return 2;
    } catch (const IntervalError& e) {
        std::cerr << "error: --family: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

/// Parse argv and run. Kept separate from main() so tests can drive it.
inline int cli_main(int argc, const char* const* argv) {
    CLI::App app{"node distributions for interpolation and spectral methods"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family_str = "cgl";
    std::string format_str = "csv";

    const auto add_common = [&](CLI::App* sub, bool with_family) {
        sub->add_option("--format", format_str, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output,-o", cfg.output, "output path ('-' or omitted for stdout)");
        if (with_family) {
            sub->add_option("--family", family_str, "node family: equi, chebzeros, cgl, scaledcheb, nd1, nd2, qscaled")
                ->required();
            sub->add_option("--s", cfg.s, "polynomial degree (node count is s+1)")
                ->required()
                ->check(CLI::PositiveNumber);
        }
    };

    CLI::App* nodes = app.add_subcommand("nodes", "emit a node distribution on [-1,1]");
    add_common(nodes, true);

    CLI::App* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constant report for one family");
    add_common(lebesgue, true);
    lebesgue->add_flag("--emit-function", cfg.emit_function, "emit the Lebesgue function F(x) on a grid");
    lebesgue->add_option("--grid", cfg.grid, "grid size for --emit-function")->check(CLI::Range(2, 100000000));

    CLI::App* table = app.add_subcommand("lebesgue-table",
                                         "Lebesgue constants for equi/cgl/scaledcheb at s = 6..18");
    add_common(table, false);

    CLI::App* ierr = app.add_subcommand("interp-error", "interpolation error curve for a built-in function");
    add_common(ierr, true);
    ierr->add_option("--function", cfg.function_id, "built-in function: exp, cos, runge, exp_sq")->required();
    ierr->add_option("--grid", cfg.grid, "evaluation grid size")->check(CLI::Range(2, 100000000));

    CLI::App* dmat = app.add_subcommand("diffmat", "differentiation matrix entries (row-major i,j,value)");
    add_common(dmat, true);

    CLI::App* derr = app.add_subcommand("diff-error", "nodal derivative errors for a built-in function");
    add_common(derr, true);
    derr->add_option("--function", cfg.function_id, "built-in function: exp, cos, runge, exp_sq")->required();

    CLI::App* vol = app.add_subcommand("volterra", "solve a built-in first-kind Volterra benchmark on [0,1]");
    add_common(vol, true);
    vol->add_option("--problem", cfg.problem_id, "built-in problem id (expker-cospi)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (nodes->parsed()) cfg.subcommand = Subcommand::Nodes;
    else if (lebesgue->parsed()) cfg.subcommand = Subcommand::Lebesgue;
    else if (table->parsed()) cfg.subcommand = Subcommand::LebesgueTable;
    else if (ierr->parsed()) cfg.subcommand = Subcommand::InterpError;
    else if (dmat->parsed()) cfg.subcommand = Subcommand::DiffMat;
    else if (derr->parsed()) cfg.subcommand = Subcommand::DiffError;
    else if (vol->parsed()) cfg.subcommand = Subcommand::Volterra;

    cfg.format = (format_str == "json") ? OutputFormat::Json : OutputFormat::Csv;
    try {
        cfg.family = parse_family(family_str);
    } catch (const UnknownFunction& e) {
        std::cerr << "error: --family: " << e.what() << "\n";
        return 2;
    }
    return run(cfg);
}

}  // namespace spnodes::cli
