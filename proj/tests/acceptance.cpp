// End-to-end acceptance gate.  Runs eight independent checks against the
// library's public entry points and prints one PASS/FAIL line each; the
// process exit code is the number of failed checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "fskan/ode.hpp"
#include "fskan/optimize.hpp"
#include "fskan/reference_data.hpp"
#include "fskan/regress.hpp"
#include "fskan/shooting.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int id, const std::string& label, bool pass, const std::string& detail) {
    if (!pass) ++g_failures;
    std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- criterion 1: flat-plate wall shear from the default hybrid solve ----

void criterion_1() {
    const auto start = Clock::now();
    const auto rep = fskan::solve({0.5, 0.0}, fskan::Algorithm::jaya, {});
    const double elapsed = seconds_since(start);
    const double alpha_err = std::abs(rep.best.alpha - 0.332057);
    const bool pass = alpha_err <= 1e-3 && rep.residual <= 1e-6 && elapsed < 10.0;
    report(1, "flat-plate wall shear 0.332057 within 1e-3, residual <= 1e-6, under 10 s", pass,
           "alpha=" + num(rep.best.alpha) + " residual=" + num(rep.residual) + " t=" +
               num(elapsed) + "s");
}

// ---- criteria 2 and 3: the ten-regime wall-shear matrix ----

void criteria_2_and_3() {
    const auto start = Clock::now();
    const auto& recs = fskan::reference_records();
    std::vector<fskan::WedgeParams> rows;
    for (const auto& r : recs) rows.push_back(r.params);
    const auto cells = fskan::run_case_matrix(rows, {fskan::Algorithm::jaya}, {});
    const double elapsed = seconds_since(start);

    bool jaya_ok = cells.size() == recs.size() && elapsed < 180.0;
    bool classical_ok = cells.size() == recs.size();
    double worst_jaya = 0.0, worst_classical = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i].ok) {
            jaya_ok = classical_ok = false;
            continue;
        }
        const double a = cells[i].best.alpha;
        worst_jaya = std::max(worst_jaya, std::abs(a - recs[i].alpha_jaya));
        worst_classical = std::max(worst_classical, std::abs(a - recs[i].alpha_zhang));
        worst_classical = std::max(worst_classical, std::abs(a - recs[i].alpha_asaithambi));
    }
    jaya_ok = jaya_ok && worst_jaya <= 1e-3;
    classical_ok = classical_ok && worst_classical <= 1e-3;

    report(2, "ten-regime wall shear within 1e-3 of the tabulated values, under 3 min", jaya_ok,
           "worst |dalpha|=" + num(worst_jaya) + " t=" + num(elapsed) + "s");
    report(3, "the same ten wall shears within 1e-3 of both classical solver columns",
           classical_ok, "worst |dalpha|=" + num(worst_classical));
}

// ---- criterion 4: velocity-profile regression for the five profiled regimes ----

void criterion_4() {
    const auto rep = fskan::regress(fskan::reference_records(), fskan::Algorithm::jaya, {});
    bool pass = true;
    int checked = 0;
    double worst = 0.0;
    for (const auto& rec : rep.records) {
        for (const auto& c : rec.checks) {
            if (c.quantity.rfind("fp@", 0) != 0) continue;
            ++checked;
            pass = pass && c.pass;
            worst = std::max(worst, std::abs(c.got - c.want));
        }
    }
    pass = pass && checked == 50;  // five regimes x ten sample points
    report(4, "velocity profiles match the reference tables within 1e-3", pass,
           std::to_string(checked) + " points, worst |df'|=" + num(worst));
}

// ---- criterion 5: the stochastic optimizer columns, loose bands ----

void criterion_5() {
    bool pass = true;
    std::string detail;
    for (const auto alg :
         {fskan::Algorithm::pso, fskan::Algorithm::ga, fskan::Algorithm::hyperband}) {
        const auto rep = fskan::regress(fskan::reference_records(), alg, {});
        double worst = 0.0;
        bool alg_ok = true;
        for (const auto& rec : rep.records) {
            for (const auto& c : rec.checks) {
                if (c.quantity != "alpha") continue;
                alg_ok = alg_ok && c.pass;
                worst = std::max(worst, std::abs(c.got - c.want));
            }
        }
        pass = pass && alg_ok;
        if (!detail.empty()) detail += ", ";
        detail += std::string(fskan::algorithm_name(alg)) + " worst=" + num(worst) + "/tol=" +
                  num(fskan::alpha_tolerance(alg));
    }
    report(5, "swarm and evolutionary wall shears inside their per-method bands", pass, detail);
}

// ---- criterion 6: fourth-order convergence of the integrator ----

void criterion_6() {
    // y' = y over [0,1]: halving the step must shrink the error ~16x
    const auto rhs = [](double, fskan::State4 y) { return fskan::State4{y.f1, 0.0, 0.0, 0.0}; };
    const auto error_at = [&](std::size_t n) {
        fskan::State4 y{1.0, 0.0, 0.0, 0.0};
        const fskan::Grid grid{0.0, 1.0, n};
        const double h = grid.h();
        for (std::size_t i = 0; i < n; ++i)
            y = fskan::rk4_step(rhs, grid.t0 + static_cast<double>(i) * h, y, h);
        return std::abs(y.f1 - std::exp(1.0));
    };
    bool pass = true;
    std::string detail = "ratios";
    double prev = error_at(8);
    for (const std::size_t n : {16, 32, 64}) {
        const double cur = error_at(n);
        const double ratio = prev / cur;
        pass = pass && ratio >= 14.0 && ratio <= 18.0;
        detail += " " + num(ratio);
        prev = cur;
    }
    report(6, "integrator error shrinks ~16x per step halving", pass, detail);
}

// ---- criterion 7: the cross-cutting invariant suite ----

void criterion_7() {
    bool pass = true;
    std::string why;
    const auto fail = [&](const std::string& what) {
        pass = false;
        if (!why.empty()) why += "; ";
        why += what;
    };

    const fskan::WedgeParams blasius{0.5, 0.0};
    const fskan::Objective objective = [&](fskan::Candidate c) {
        return fskan::fitness(c, blasius);
    };
    const fskan::FidelityObjective fid = [&](fskan::Candidate c, double r) {
        return fskan::fitness(c, blasius,
                              static_cast<std::size_t>(50 + (r - 1.0) / (6561.0 - 1.0) * 950.0));
    };
    const std::vector<fskan::Algorithm> algs = {fskan::Algorithm::jaya, fskan::Algorithm::pso,
                                                fskan::Algorithm::ga, fskan::Algorithm::hyperband};

    // monotone histories + bit-identical reruns
    for (const auto alg : algs) {
        fskan::OptimizerConfig cfg;
        cfg.seed = 3;
        const auto a = fskan::optimize(objective, {}, cfg, alg, fid);
        const auto b = fskan::optimize(objective, {}, cfg, alg, fid);
        for (std::size_t i = 1; i < a.history.size(); ++i)
            if (a.history[i].best_fitness > a.history[i - 1].best_fitness)
                fail(std::string("history not monotone for ") + fskan::algorithm_name(alg));
        if (a.history.size() != b.history.size() || a.best_fitness != b.best_fitness ||
            a.best.alpha != b.best.alpha || a.best.eta_inf != b.best.eta_inf)
            fail(std::string("rerun differs for ") + fskan::algorithm_name(alg));
        for (std::size_t i = 0; i < a.history.size() && i < b.history.size(); ++i)
            if (a.history[i].best_fitness != b.history[i].best_fitness ||
                a.history[i].best.alpha != b.history[i].best.alpha ||
                a.history[i].best.eta_inf != b.history[i].best.eta_inf)
                fail(std::string("history rerun differs for ") + fskan::algorithm_name(alg));
    }

    // bound respect for every evaluated candidate
    fskan::SearchBounds tight;
    tight.lo[0] = 0.2;
    tight.hi[0] = 0.5;
    tight.lo[1] = 6.0;
    tight.hi[1] = 9.0;
    for (const auto alg : algs) {
        bool inside = true;
        const fskan::Objective probe = [&](fskan::Candidate c) {
            inside = inside && tight.contains(c);
            return objective(c);
        };
        const fskan::FidelityObjective probe_fid = [&](fskan::Candidate c, double r) {
            inside = inside && tight.contains(c);
            return fid(c, r);
        };
        fskan::OptimizerConfig cfg;
        cfg.max_iterations = 25;
        fskan::optimize(probe, tight, cfg, alg, probe_fid);
        if (!inside) fail(std::string("bounds violated by ") + fskan::algorithm_name(alg));
    }

    // collapsed population is a fixed point of the jaya sweep
    {
        fskan::Population pop;
        pop.candidates.assign(6, {1.5, 7.0});
        pop.fitness.assign(6, objective({1.5, 7.0}));
        pop.refresh_extremes();
        fskan::Rng rng(11);
        fskan::jaya_step(pop, objective, {}, rng);
        for (const auto& c : pop.candidates)
            if (c.alpha != 1.5 || c.eta_inf != 7.0) fail("collapsed population moved");
    }

    // fitness is non-negative everywhere it is sampled
    {
        fskan::Rng rng(17);
        for (int i = 0; i < 200; ++i) {
            const fskan::Candidate c{rng.uniform(0.0, 3.0), rng.uniform(1.0, 12.0)};
            if (!(fskan::fitness(c, blasius) >= 0.0)) fail("negative fitness");
        }
    }

    // solved profiles close both outer boundary conditions in every regime
    double worst_endpoint = 0.0;
    for (const auto& rec : fskan::reference_records()) {
        const auto rep = fskan::solve(rec.params, fskan::Algorithm::jaya, {});
        const auto& last = rep.profile.back();
        const double err = std::max(std::abs(last.fp - 1.0), std::abs(last.fpp));
        worst_endpoint = std::max(worst_endpoint, err);
        if (err > 1e-4) fail(std::string("profile endpoints off for ") + rec.name);
    }

    report(7, "invariants: monotone histories, bounds, determinism, fixed point, endpoints",
           pass, pass ? "worst endpoint error=" + num(worst_endpoint) : why);
}

// ---- criterion 8: optimizers beat a brute-force grid scan ----

void criterion_8() {
    const auto start = Clock::now();
    const fskan::WedgeParams blasius{0.5, 0.0};
    const fskan::Objective objective = [&](fskan::Candidate c) {
        return fskan::fitness(c, blasius);
    };
    const fskan::SearchBounds bounds;

    double grid_min = std::numeric_limits<double>::infinity();
    constexpr int kGrid = 200;
    for (int i = 0; i < kGrid; ++i) {
        const double a = bounds.lo[0] + (bounds.hi[0] - bounds.lo[0]) * i / (kGrid - 1);
        for (int j = 0; j < kGrid; ++j) {
            const double e = bounds.lo[1] + (bounds.hi[1] - bounds.lo[1]) * j / (kGrid - 1);
            grid_min = std::min(grid_min, objective({a, e}));
        }
    }

    bool pass = true;
    std::string detail = "grid min=" + num(grid_min);
    for (const auto alg : {fskan::Algorithm::jaya, fskan::Algorithm::pso, fskan::Algorithm::ga,
                           fskan::Algorithm::hyperband}) {
        const auto res = fskan::optimize(objective, bounds, {}, alg,
                                         [&](fskan::Candidate c, double r) {
                                             return fskan::fitness(
                                                 c, blasius,
                                                 static_cast<std::size_t>(
                                                     50 + (r - 1.0) / (6561.0 - 1.0) * 950.0));
                                         });
        pass = pass && res.best_fitness <= grid_min;
        detail += std::string(", ") + fskan::algorithm_name(alg) + "=" + num(res.best_fitness);
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 120.0;
    report(8, "every optimizer refines below a 200x200 grid scan, under 2 min", pass,
           detail + ", t=" + num(elapsed) + "s");
}

}  // namespace

int main() {
    criterion_1();
    criteria_2_and_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("%d/8 criteria passed\n", 8 - g_failures);
    return g_failures;
}
