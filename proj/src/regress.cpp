#include "fskan/regress.hpp"

#include <cmath>

#include "fskan/emit.hpp"
#include "fskan/ode.hpp"
#include "fskan/rng.hpp"

namespace fskan {

double alpha_tolerance(Algorithm alg) {
    switch (alg) {
        case Algorithm::jaya: return 1e-3;
        case Algorithm::pso: return 5e-3;
        case Algorithm::ga: return 5e-3;
        case Algorithm::hyperband: return 2e-2;
    }
    return 1e-3;
}

RegressReport regress(const std::vector<ReferenceRecord>& records, Algorithm algorithm,
                      const OptimizerConfig& cfg, std::size_t n_steps,
                      const SearchBounds& bounds) {
    RegressReport report;
    report.all_pass = true;

    for (std::size_t ri = 0; ri < records.size(); ++ri) {
        const ReferenceRecord& rec = records[ri];
        RecordResult result;
        result.regime = rec.name;
        result.pass = true;

        OptimizerConfig rec_cfg = cfg;
        rec_cfg.seed = derive_seed(cfg.seed, ri, static_cast<std::uint64_t>(algorithm));
        const SolveReport solved = solve(rec.params, algorithm, rec_cfg, n_steps, bounds);

        RegressCheck alpha_check;
        alpha_check.quantity = "alpha";
        alpha_check.got = solved.best.alpha;
        alpha_check.want = alpha_column(rec, algorithm);
        alpha_check.tol = alpha_tolerance(algorithm);
        alpha_check.pass = std::abs(alpha_check.got - alpha_check.want) <= alpha_check.tol;
        result.pass = result.pass && alpha_check.pass;
        result.checks.push_back(alpha_check);

        if (!rec.velocity.empty()) {
            const std::size_t steps = solved.config.report_steps;
            const WedgeParams p = rec.params;
            const auto field = [p](double, State4 y) { return rhs(y, p); };
            const Candidate at_reference{solved.best.alpha, rec.eta_inf_jaya};
            const auto res = integrate(field, Grid(0.0, 1.0, steps),
                                       initial_state(at_reference), /*record=*/true);
            for (const auto& point : rec.velocity) {
                RegressCheck vcheck;
                vcheck.quantity = "fp@xi=" + format_shortest(point.xi);
                vcheck.want = point.fp_ref;
                vcheck.tol = kVelocityTolerance;
                const auto idx = static_cast<std::size_t>(
                    point.xi * static_cast<double>(steps) + 0.5);
                if (res.ok() && idx < res.trajectory.size()) {
                    vcheck.got = res.trajectory[idx].y.f2;
                    vcheck.pass = std::abs(vcheck.got - vcheck.want) <= vcheck.tol;
                } else {
                    vcheck.got = std::numeric_limits<double>::quiet_NaN();
                    vcheck.pass = false;
                }
                result.pass = result.pass && vcheck.pass;
                result.checks.push_back(vcheck);
            }
        }

        report.all_pass = report.all_pass && result.pass;
        report.records.push_back(std::move(result));
    }
    return report;
}

}  // namespace fskan
