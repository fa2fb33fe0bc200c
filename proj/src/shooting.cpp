#include "fskan/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fskan/ode.hpp"
#include "fskan/rng.hpp"

namespace fskan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// resource r in [1, R] mapped linearly onto integration step counts
// [50, n_steps], so low-fidelity screening is genuinely cheaper
std::size_t steps_for_resource(double r, double max_resource, std::size_t n_steps) {
    if (max_resource <= 1.0) return n_steps;
    const double lo = 50.0;
    const double hi = static_cast<double>(n_steps);
    const double raw = lo + (hi - lo) * (r - 1.0) / (max_resource - 1.0);
    const double clamped = std::min(std::max(raw, lo), hi);
    return static_cast<std::size_t>(clamped + 0.5);
}

}  // namespace

double fitness(Candidate c, WedgeParams p, std::size_t n_steps) {
    if (!std::isfinite(c.alpha) || !std::isfinite(c.eta_inf) || !(c.eta_inf > 0.0)) return kInf;
    const auto field = [p](double, State4 y) { return rhs(y, p); };
    const auto res = integrate(field, Grid(0.0, 1.0, n_steps), State4{0.0, 0.0, c.alpha, c.eta_inf});
    if (!res.ok()) return kInf;
    const ResidualPair rp = boundary_residual(res.final_state);
    const double norm = std::sqrt(rp.r1 * rp.r1 + rp.r2 * rp.r2);
    return std::isfinite(norm) ? norm : kInf;
}

SolveReport solve(WedgeParams p, Algorithm algorithm, const OptimizerConfig& cfg,
                  std::size_t n_steps, const SearchBounds& bounds) {
    if (n_steps < 1) throw std::invalid_argument("n_steps must be at least 1");

    const Objective objective = [p, n_steps](Candidate c) { return fitness(c, p, n_steps); };
    const double max_resource = cfg.hyperband.max_resource;
    const FidelityObjective at_fidelity = [p, n_steps, max_resource](Candidate c, double r) {
        return fitness(c, p, steps_for_resource(r, max_resource, n_steps));
    };

    // Decelerating rows always take all 5 starts: the surface flattens as
    // alpha -> 0 and the best of several streams is wanted.  Other rows only
    // retry while the terminal residual stays poor, which rescues the odd
    // run whose population collapsed against a bound; a healthy first start
    // short-circuits, keeping converged solves identical to a single run.
    const bool always_multi = p.beta < 0.0;
    constexpr std::size_t kMaxStarts = 5;
    constexpr double kRetryThreshold = 1e-3;  // residual at search fidelity
    OptimizeResult winner;
    for (std::size_t k = 0; k < kMaxStarts; ++k) {
        OptimizerConfig start_cfg = cfg;
        if (k > 0) start_cfg.seed = derive_seed(cfg.seed, k, 0);
        OptimizeResult run = optimize(objective, bounds, start_cfg, algorithm, at_fidelity);
        if (k == 0 || run.best_fitness < winner.best_fitness) winner = std::move(run);
        if (!always_multi && winner.best_fitness <= kRetryThreshold) break;
    }

    SolveReport report;
    report.params = p;
    report.best = winner.best;
    report.history = std::move(winner.history);
    report.config = {algorithm_name(algorithm), cfg.seed,        cfg.population_size,
                     cfg.max_iterations,        n_steps,         std::max(kReportSteps, n_steps)};

    const auto field = [p](double, State4 y) { return rhs(y, p); };
    const auto res = integrate(field, Grid(0.0, 1.0, report.config.report_steps),
                               initial_state(report.best), /*record=*/true);
    if (res.ok()) {
        const ResidualPair rp = boundary_residual(res.final_state);
        const double norm = std::sqrt(rp.r1 * rp.r1 + rp.r2 * rp.r2);
        report.residual = std::isfinite(norm) ? norm : kInf;
    } else {
        report.residual = kInf;
    }
    report.profile = physical_profile(res.trajectory, report.best);
    return report;
}

std::vector<MatrixCell> run_case_matrix(const std::vector<WedgeParams>& rows,
                                        const std::vector<Algorithm>& algorithms,
                                        const OptimizerConfig& cfg, std::size_t n_steps,
                                        const SearchBounds& bounds) {
    std::vector<MatrixCell> cells;
    cells.reserve(rows.size() * algorithms.size());
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        for (std::size_t aj = 0; aj < algorithms.size(); ++aj) {
            MatrixCell cell;
            cell.params = rows[ri];
            cell.algorithm = algorithms[aj];
            OptimizerConfig cell_cfg = cfg;
            cell_cfg.seed = derive_seed(cfg.seed, ri, aj);
            try {
                SolveReport rep = solve(rows[ri], algorithms[aj], cell_cfg, n_steps, bounds);
                cell.ok = true;
                cell.best = rep.best;
                cell.residual = rep.residual;
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

}  // namespace fskan
