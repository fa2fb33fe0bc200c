#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "fskan/emit.hpp"
#include "fskan/reference_data.hpp"
#include "fskan/regress.hpp"
#include "fskan/shooting.hpp"

namespace {

struct Options {
    double beta0 = 0.5;
    double beta = 0.0;
    std::vector<std::string> optimizers = {"jaya"};
    std::size_t pop = 20;
    std::size_t iters = 100;
    std::uint64_t seed = 0;
    std::size_t steps = fskan::kDefaultSteps;
    std::vector<double> bounds = {0.0, 3.0, 1.0, 12.0};
    std::string format = "csv";
    std::string out;
    bool beta0_given = false;
    bool beta_given = false;
};

void add_common_flags(CLI::App* cmd, Options& o, bool single_algorithm) {
    cmd->add_option("--beta0", o.beta0, "flow constant beta0")
        ->each([&o](const std::string&) { o.beta0_given = true; });
    cmd->add_option("--beta", o.beta, "wedge parameter beta")
        ->each([&o](const std::string&) { o.beta_given = true; });
    auto* opt = cmd->add_option("--optimizer", o.optimizers,
                                "search algorithm: jaya, pso, ga, hyperband");
    if (single_algorithm) opt->expected(1);
    cmd->add_option("--pop", o.pop, "population size");
    cmd->add_option("--iters", o.iters, "iteration budget");
    cmd->add_option("--seed", o.seed, "64-bit RNG seed");
    cmd->add_option("--steps", o.steps, "integration steps per fitness evaluation");
    cmd->add_option("--bounds", o.bounds, "search box a_lo,a_hi,e_lo,e_hi")
        ->delimiter(',')
        ->expected(1, 4);
    cmd->add_option("--out", o.out, "output path ('-' for stdout)");
}

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

struct Sink {
    std::ostream* stream = nullptr;
    std::unique_ptr<std::ofstream> file;
    std::string path;  // empty when stdout
};

// empty path or "-" selects stdout
bool open_sink(Sink& sink, const std::string& path) {
    if (path.empty() || path == "-") {
        sink.stream = &std::cout;
        return true;
    }
    sink.file = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*sink.file) return false;
    sink.stream = sink.file.get();
    sink.path = path;
    return true;
}

std::string derived_name(const Options& o, const std::string& alg, const std::string& suffix,
                         const std::string& ext) {
    return "fs_b0" + fskan::format_shortest(o.beta0) + "_b" + fskan::format_shortest(o.beta) +
           "_" + alg + suffix + "." + ext;
}

fskan::OptimizerConfig make_config(const Options& o) {
    fskan::OptimizerConfig cfg;
    cfg.population_size = o.pop;
    cfg.max_iterations = o.iters;
    cfg.seed = o.seed;
    return cfg;
}

bool make_bounds(const Options& o, fskan::SearchBounds& bounds, std::string& message) {
    if (o.bounds.size() != 4) {
        message = "--bounds needs exactly four values: a_lo,a_hi,e_lo,e_hi";
        return false;
    }
    bounds.lo[0] = o.bounds[0];
    bounds.hi[0] = o.bounds[1];
    bounds.lo[1] = o.bounds[2];
    bounds.hi[1] = o.bounds[3];
    if (!(bounds.lo[0] < bounds.hi[0]) || !(bounds.lo[1] < bounds.hi[1])) {
        message = "--bounds must satisfy a_lo < a_hi and e_lo < e_hi";
        return false;
    }
    return true;
}

int run_solve_like(const Options& o, bool convergence_output) {
    const auto alg = fskan::parse_algorithm(o.optimizers.front());
    if (!alg) return fail_usage("unknown --optimizer value: " + o.optimizers.front());
    const auto format = fskan::parse_format(o.format);
    if (!format) return fail_usage("unknown --format value: " + o.format);

    fskan::SearchBounds bounds;
    std::string message;
    if (!make_bounds(o, bounds, message)) return fail_usage(message);

    const fskan::SolveReport report = fskan::solve({o.beta0, o.beta}, *alg, make_config(o),
                                                   o.steps, bounds);

    const std::string ext = (!convergence_output && *format == fskan::OutputFormat::json)
                                ? "json"
                                : "csv";
    const std::string path = o.out.empty()
                                 ? derived_name(o, o.optimizers.front(),
                                                convergence_output ? "_conv" : "", ext)
                                 : o.out;
    Sink sink;
    if (!open_sink(sink, path)) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return 1;
    }
    if (convergence_output)
        fskan::emit_convergence(report.history, *sink.stream);
    else
        fskan::emit_profile(report, *format, *sink.stream);
    if (!*sink.stream) {
        std::cerr << "error: write failed: " << path << "\n";
        return 1;
    }

    std::cerr << "alpha=" << fskan::format_number(report.best.alpha)
              << " eta_inf=" << fskan::format_number(report.best.eta_inf)
              << " residual=" << fskan::format_number(report.residual);
    if (!sink.path.empty()) std::cerr << " -> " << sink.path;
    std::cerr << "\n";
    return 0;
}

int run_matrix(const Options& o) {
    std::vector<fskan::Algorithm> algorithms;
    for (const auto& name : o.optimizers) {
        const auto alg = fskan::parse_algorithm(name);
        if (!alg) return fail_usage("unknown --optimizer value: " + name);
        algorithms.push_back(*alg);
    }
    fskan::SearchBounds bounds;
    std::string message;
    if (!make_bounds(o, bounds, message)) return fail_usage(message);

    std::vector<fskan::WedgeParams> rows;
    if (o.beta0_given || o.beta_given) {
        rows.push_back({o.beta0, o.beta});
    } else {
        for (const auto& rec : fskan::reference_records()) rows.push_back(rec.params);
    }

    const auto cells = fskan::run_case_matrix(rows, algorithms, make_config(o), o.steps, bounds);

    Sink sink;
    if (!open_sink(sink, o.out)) {
        std::cerr << "error: cannot open output file: " << o.out << "\n";
        return 1;
    }
    fskan::emit_matrix(cells, *sink.stream);
    if (!*sink.stream) {
        std::cerr << "error: write failed: " << o.out << "\n";
        return 1;
    }
    for (const auto& cell : cells) {
        if (!cell.ok)
            std::cerr << "cell beta0=" << cell.params.beta0 << " beta=" << cell.params.beta
                      << " " << fskan::algorithm_name(cell.algorithm)
                      << " failed: " << cell.error << "\n";
    }
    return 0;
}

int run_regress(const Options& o) {
    const auto alg = fskan::parse_algorithm(o.optimizers.front());
    if (!alg) return fail_usage("unknown --optimizer value: " + o.optimizers.front());
    fskan::SearchBounds bounds;
    std::string message;
    if (!make_bounds(o, bounds, message)) return fail_usage(message);

    std::vector<fskan::ReferenceRecord> records;
    for (const auto& rec : fskan::reference_records()) {
        if (o.beta0_given && rec.params.beta0 != o.beta0) continue;
        if (o.beta_given && rec.params.beta != o.beta) continue;
        records.push_back(rec);
    }
    if (records.empty()) return fail_usage("no reference regime matches the given --beta0/--beta");

    const auto report = fskan::regress(records, *alg, make_config(o), o.steps, bounds);

    Sink sink;
    if (!open_sink(sink, o.out)) {
        std::cerr << "error: cannot open output file: " << o.out << "\n";
        return 1;
    }
    std::size_t passed = 0;
    for (const auto& rec : report.records) {
        for (const auto& check : rec.checks) {
            *sink.stream << (check.pass ? "PASS " : "FAIL ") << rec.regime << ' '
                         << check.quantity << " got=" << fskan::format_number(check.got)
                         << " want=" << fskan::format_number(check.want)
                         << " tol=" << fskan::format_shortest(check.tol) << "\n";
        }
        if (rec.pass) ++passed;
    }
    *sink.stream << "regress: " << passed << "/" << report.records.size()
                 << " records passed\n";
    if (!*sink.stream) {
        std::cerr << "error: write failed\n";
        return 1;
    }
    return report.all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-layer wedge-flow solver: RK4 shooting driven by "
                 "population optimizers"};
    app.require_subcommand(1);

    Options solve_opts, conv_opts, matrix_opts, regress_opts;
    auto* solve_cmd = app.add_subcommand(
        "solve", "solve one regime and emit the physical profile");
    add_common_flags(solve_cmd, solve_opts, true);
    solve_cmd->add_option("--format", solve_opts.format, "output format: csv or json");

    auto* conv_cmd = app.add_subcommand(
        "convergence", "solve one regime and emit the optimizer history");
    add_common_flags(conv_cmd, conv_opts, true);

    auto* matrix_cmd = app.add_subcommand(
        "matrix", "solve every known regime (or one via --beta0/--beta) per optimizer");
    add_common_flags(matrix_cmd, matrix_opts, false);

    auto* regress_cmd = app.add_subcommand(
        "regress", "compare fresh solves against the embedded reference records");
    add_common_flags(regress_cmd, regress_opts, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve_like(solve_opts, false);
        if (conv_cmd->parsed()) return run_solve_like(conv_opts, true);
        if (matrix_cmd->parsed()) return run_matrix(matrix_opts);
        if (regress_cmd->parsed()) return run_regress(regress_opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
