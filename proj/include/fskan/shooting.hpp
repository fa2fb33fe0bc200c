#pragma once

// Shooting driver: the terminal-residual fitness, the hybrid solve, and the
// case-matrix runner used by regression tooling.

#include <cstddef>
#include <string>
#include <vector>

#include "fskan/optimize.hpp"
#include "fskan/problem.hpp"

namespace fskan {

inline constexpr std::size_t kDefaultSteps = 1000;
// Profiles and reported residuals are re-integrated at this fidelity (or the
// search fidelity, whichever is higher): cheap search, accurate reporting.
inline constexpr std::size_t kReportSteps = 4000;

struct SolveConfigEcho {
    std::string algorithm;
    std::uint64_t seed = 0;
    std::size_t population_size = 0;
    std::size_t max_iterations = 0;
    std::size_t n_steps = 0;       // fidelity used inside the optimizer
    std::size_t report_steps = 0;  // fidelity of residual + profile
};

struct SolveReport {
    WedgeParams params{};
    Candidate best{};
    double residual = 0.0;  // Euclidean terminal residual at report_steps
    ConvergenceHistory history;
    std::vector<ProfileSample> profile;
    SolveConfigEcho config{};
};

// Euclidean norm of (f2(1)-1, f3(1)) after integrating from (0,0,alpha,eta_inf);
// +infinity when the candidate is unusable or the integration leaves the
// finite range.
double fitness(Candidate c, WedgeParams p, std::size_t n_steps = kDefaultSteps);

// Runs the chosen optimizer over the fitness landscape, then re-integrates
// the winner with recording to build the report.  Decelerating regimes
// (beta < 0) flatten the landscape near alpha = 0, so those solves run 5
// seeds derived from cfg.seed and keep the best.
SolveReport solve(WedgeParams p, Algorithm algorithm, const OptimizerConfig& cfg,
                  std::size_t n_steps = kDefaultSteps, const SearchBounds& bounds = {});

struct MatrixCell {
    WedgeParams params{};
    Algorithm algorithm = Algorithm::jaya;
    bool ok = false;
    std::string error;
    Candidate best{};
    double residual = 0.0;
};

// One solve per (row, algorithm), row-major, each cell on its own RNG stream
// derived from (cfg.seed, row index, algorithm index).  Failures are recorded
// in the cell, not thrown.
std::vector<MatrixCell> run_case_matrix(const std::vector<WedgeParams>& rows,
                                        const std::vector<Algorithm>& algorithms,
                                        const OptimizerConfig& cfg,
                                        std::size_t n_steps = kDefaultSteps,
                                        const SearchBounds& bounds = {});

}  // namespace fskan
