#pragma once

// Population-based derivative-free minimizers over the box-bounded
// (alpha, eta_inf) plane, behind one `optimize` entry point.
//
// All four algorithms draw from a single Rng stream in a fixed documented
// order, so a (seed, config) pair reproduces bit-identically anywhere:
//   - initialization: candidate 0..N-1, within each candidate dim 0 then 1
//   - jaya sweep:     candidate i, dim d: r1 then r2
//   - pso sweep:      particle i, dim d: r1 then r2
//   - ga child:       2 tournament index draws per parent (a then b),
//                     crossover coin, per-dim blend weight if crossing,
//                     per-dim mutation coin + two draws per Gaussian
//   - hyperband:      per bracket, n fresh samples (dim 0 then 1 each)
// Non-finite objective values are treated as +infinity so a divergent
// integration loses every comparison instead of aborting the run.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fskan/problem.hpp"
#include "fskan/rng.hpp"

namespace fskan {

enum class Algorithm { jaya, pso, ga, hyperband };

std::optional<Algorithm> parse_algorithm(const std::string& name);
const char* algorithm_name(Algorithm alg);

struct SearchBounds {
    // dim 0 = alpha, dim 1 = eta_inf
    double lo[2] = {0.0, 1.0};
    double hi[2] = {3.0, 12.0};

    Candidate clamp(Candidate c) const;
    bool contains(Candidate c) const;
};

struct PsoParams {
    double w = 0.7;
    double c1 = 1.5;
    double c2 = 1.5;
};

struct GaParams {
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;
    double mutation_scale = 0.1;  // Gaussian sigma as a fraction of the box width
    std::size_t elite_count = 1;
};

struct HyperbandParams {
    double max_resource = 6561.0;  // R
    double halving = 3.0;          // eta
};

struct OptimizerConfig {
    std::size_t population_size = 20;
    std::size_t max_iterations = 100;
    std::uint64_t seed = 0;
    PsoParams pso{};
    GaParams ga{};
    HyperbandParams hyperband{};
};

struct Population {
    std::vector<Candidate> candidates;
    std::vector<double> fitness;
    std::size_t best_index = 0;
    std::size_t worst_index = 0;

    void refresh_extremes();  // lowest index wins ties
};

struct HistoryEntry {
    std::size_t iteration = 0;  // 1-based
    double best_fitness = 0.0;
    Candidate best{};
};

using ConvergenceHistory = std::vector<HistoryEntry>;

using Objective = std::function<double(Candidate)>;
// second argument: resource in [1, R]; meaning is the caller's choice
using FidelityObjective = std::function<double(Candidate, double)>;

struct OptimizeResult {
    Candidate best{};
    double best_fitness = std::numeric_limits<double>::infinity();
    ConvergenceHistory history;
};

// x + r1*(best - |x|) - r2*(worst - |x|), the per-dimension trial move
constexpr double jaya_trial(double x, double best, double worst, double r1, double r2) {
    const double ax = x < 0.0 ? -x : x;
    return x + r1 * (best - ax) - r2 * (worst - ax);
}

void jaya_step(Population& pop, const Objective& objective, const SearchBounds& bounds, Rng& rng);

struct PsoSwarm {
    Population pop;
    std::vector<Candidate> velocity;
    std::vector<Candidate> personal_best;
    std::vector<double> personal_best_fitness;
    Candidate global_best{};
    double global_best_fitness = std::numeric_limits<double>::infinity();
};

void pso_step(PsoSwarm& swarm, const Objective& objective, const SearchBounds& bounds, Rng& rng,
              PsoParams params);

void ga_step(Population& pop, const Objective& objective, const SearchBounds& bounds, Rng& rng,
             const GaParams& params);

struct HyperbandResult {
    Candidate best{};
    double best_loss = std::numeric_limits<double>::infinity();
    ConvergenceHistory bracket_history;  // one entry per bracket, cumulative best
};

HyperbandResult hyperband_run(const FidelityObjective& objective_at_fidelity,
                              const SearchBounds& bounds, double max_resource, double halving,
                              Rng& rng);

// For jaya/pso/ga the history has one entry per iteration; for hyperband,
// one per bracket.  When `fidelity` is empty, hyperband evaluates every
// resource level with `objective` (correct, just not cheaper).
OptimizeResult optimize(const Objective& objective, const SearchBounds& bounds,
                        const OptimizerConfig& cfg, Algorithm algorithm,
                        const FidelityObjective& fidelity = {});

}  // namespace fskan
