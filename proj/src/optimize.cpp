#include "fskan/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fskan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double get_dim(Candidate c, int d) { return d == 0 ? c.alpha : c.eta_inf; }

void set_dim(Candidate& c, int d, double v) {
    if (d == 0)
        c.alpha = v;
    else
        c.eta_inf = v;
}

double sanitized(const Objective& objective, Candidate c) {
    const double v = objective(c);
    return std::isfinite(v) ? v : kInf;
}

void validate_bounds(const SearchBounds& b) {
    for (int d = 0; d < 2; ++d) {
        if (!std::isfinite(b.lo[d]) || !std::isfinite(b.hi[d]) || !(b.lo[d] < b.hi[d]))
            throw std::invalid_argument("search bounds must satisfy lo < hi in every dimension");
    }
}

void validate_config(const OptimizerConfig& cfg, Algorithm alg) {
    if (cfg.population_size < 4)
        throw std::invalid_argument("population_size must be at least 4");
    if (cfg.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (alg == Algorithm::pso) {
        if (!(cfg.pso.w >= 0.0) || !(cfg.pso.c1 >= 0.0) || !(cfg.pso.c2 >= 0.0) ||
            !std::isfinite(cfg.pso.w + cfg.pso.c1 + cfg.pso.c2))
            throw std::invalid_argument("pso coefficients must be finite and non-negative");
    }
    if (alg == Algorithm::ga) {
        const auto& g = cfg.ga;
        if (!(g.crossover_rate >= 0.0 && g.crossover_rate <= 1.0) ||
            !(g.mutation_rate >= 0.0 && g.mutation_rate <= 1.0) || !(g.mutation_scale >= 0.0) ||
            !std::isfinite(g.mutation_scale))
            throw std::invalid_argument("ga rates must lie in [0,1] and mutation_scale be finite");
        if (g.elite_count >= cfg.population_size)
            throw std::invalid_argument("ga elite_count must be smaller than population_size");
    }
    if (alg == Algorithm::hyperband) {
        if (!(cfg.hyperband.halving >= 2.0))
            throw std::invalid_argument("hyperband halving factor must be at least 2");
        if (!(cfg.hyperband.max_resource >= 1.0))
            throw std::invalid_argument("hyperband max_resource must be at least 1");
    }
}

Population init_population(const Objective& objective, const SearchBounds& bounds,
                           std::size_t n, Rng& rng) {
    Population pop;
    pop.candidates.reserve(n);
    pop.fitness.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Candidate c;
        for (int d = 0; d < 2; ++d) set_dim(c, d, rng.uniform(bounds.lo[d], bounds.hi[d]));
        pop.candidates.push_back(c);
    }
    for (const auto& c : pop.candidates) pop.fitness.push_back(sanitized(objective, c));
    pop.refresh_extremes();
    return pop;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    if (name == "jaya") return Algorithm::jaya;
    if (name == "pso") return Algorithm::pso;
    if (name == "ga") return Algorithm::ga;
    if (name == "hyperband") return Algorithm::hyperband;
    return std::nullopt;
}

const char* algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::jaya: return "jaya";
        case Algorithm::pso: return "pso";
        case Algorithm::ga: return "ga";
        case Algorithm::hyperband: return "hyperband";
    }
    return "unknown";
}

Candidate SearchBounds::clamp(Candidate c) const {
    Candidate out = c;
    for (int d = 0; d < 2; ++d)
        set_dim(out, d, std::min(std::max(get_dim(c, d), lo[d]), hi[d]));
    return out;
}

bool SearchBounds::contains(Candidate c) const {
    for (int d = 0; d < 2; ++d)
        if (get_dim(c, d) < lo[d] || get_dim(c, d) > hi[d]) return false;
    return true;
}

void Population::refresh_extremes() {
    best_index = 0;
    worst_index = 0;
    for (std::size_t i = 1; i < fitness.size(); ++i) {
        if (fitness[i] < fitness[best_index]) best_index = i;
        if (fitness[i] > fitness[worst_index]) worst_index = i;
    }
}

void jaya_step(Population& pop, const Objective& objective, const SearchBounds& bounds, Rng& rng) {
    // best/worst frozen for the whole sweep; trials accepted only on strict improvement
    const Candidate best = pop.candidates[pop.best_index];
    const Candidate worst = pop.candidates[pop.worst_index];
    for (std::size_t i = 0; i < pop.candidates.size(); ++i) {
        Candidate trial = pop.candidates[i];
        for (int d = 0; d < 2; ++d) {
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            set_dim(trial, d, jaya_trial(get_dim(trial, d), get_dim(best, d), get_dim(worst, d),
                                         r1, r2));
        }
        trial = bounds.clamp(trial);
        const double f = sanitized(objective, trial);
        if (f < pop.fitness[i]) {
            pop.candidates[i] = trial;
            pop.fitness[i] = f;
        }
    }
    pop.refresh_extremes();
}

void pso_step(PsoSwarm& swarm, const Objective& objective, const SearchBounds& bounds, Rng& rng,
              PsoParams params) {
    auto& pop = swarm.pop;
    for (std::size_t i = 0; i < pop.candidates.size(); ++i) {
        Candidate x = pop.candidates[i];
        Candidate v = swarm.velocity[i];
        for (int d = 0; d < 2; ++d) {
            const double r1 = rng.uniform01();
            const double r2 = rng.uniform01();
            const double vel = params.w * get_dim(v, d) +
                               params.c1 * r1 * (get_dim(swarm.personal_best[i], d) - get_dim(x, d)) +
                               params.c2 * r2 * (get_dim(swarm.global_best, d) - get_dim(x, d));
            double pos = get_dim(x, d) + vel;
            if (pos < bounds.lo[d] || pos > bounds.hi[d]) {
                pos = std::min(std::max(pos, bounds.lo[d]), bounds.hi[d]);
                set_dim(v, d, 0.0);  // kill velocity into the wall
            } else {
                set_dim(v, d, vel);
            }
            set_dim(x, d, pos);
        }
        pop.candidates[i] = x;
        swarm.velocity[i] = v;
        const double f = sanitized(objective, x);
        pop.fitness[i] = f;
        if (f < swarm.personal_best_fitness[i]) {
            swarm.personal_best[i] = x;
            swarm.personal_best_fitness[i] = f;
        }
    }
    // global best refreshed once per sweep, lowest index wins ties
    for (std::size_t i = 0; i < pop.candidates.size(); ++i) {
        if (swarm.personal_best_fitness[i] < swarm.global_best_fitness) {
            swarm.global_best = swarm.personal_best[i];
            swarm.global_best_fitness = swarm.personal_best_fitness[i];
        }
    }
    pop.refresh_extremes();
}

void ga_step(Population& pop, const Objective& objective, const SearchBounds& bounds, Rng& rng,
             const GaParams& params) {
    const std::size_t n = pop.candidates.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pop.fitness[a] < pop.fitness[b]; });

    Population next;
    next.candidates.reserve(n);
    next.fitness.reserve(n);
    for (std::size_t e = 0; e < params.elite_count; ++e) {
        next.candidates.push_back(pop.candidates[order[e]]);
        next.fitness.push_back(pop.fitness[order[e]]);
    }

    auto tournament = [&]() -> Candidate {
        const std::size_t i = rng.uniform_index(n);
        const std::size_t j = rng.uniform_index(n);
        return pop.fitness[j] < pop.fitness[i] ? pop.candidates[j] : pop.candidates[i];
    };

    while (next.candidates.size() < n) {
        const Candidate a = tournament();
        const Candidate b = tournament();
        Candidate child = a;
        if (rng.uniform01() < params.crossover_rate) {
            for (int d = 0; d < 2; ++d) {
                const double lambda = rng.uniform(-0.25, 1.25);
                set_dim(child, d, lambda * get_dim(a, d) + (1.0 - lambda) * get_dim(b, d));
            }
        }
        for (int d = 0; d < 2; ++d) {
            if (rng.uniform01() < params.mutation_rate) {
                const double sigma = params.mutation_scale * (bounds.hi[d] - bounds.lo[d]);
                set_dim(child, d, get_dim(child, d) + sigma * rng.gaussian());
            }
        }
        child = bounds.clamp(child);
        next.candidates.push_back(child);
        next.fitness.push_back(sanitized(objective, child));
    }
    next.refresh_extremes();
    pop = std::move(next);
}

HyperbandResult hyperband_run(const FidelityObjective& objective_at_fidelity,
                              const SearchBounds& bounds, double max_resource, double halving,
                              Rng& rng) {
    if (!(halving >= 2.0)) throw std::invalid_argument("hyperband halving factor must be >= 2");
    if (!(max_resource >= 1.0)) throw std::invalid_argument("hyperband max_resource must be >= 1");

    const double R = max_resource;
    const double eta = halving;
    int s_max = 0;
    for (double p = eta; p <= R * (1.0 + 1e-9); p *= eta) ++s_max;

    HyperbandResult result;
    std::size_t bracket_number = 0;
    for (int s = s_max; s >= 0; --s, ++bracket_number) {
        double eta_s = 1.0;
        for (int k = 0; k < s; ++k) eta_s *= eta;
        const auto n = static_cast<std::size_t>(
            std::ceil(static_cast<double>(s_max + 1) * eta_s / static_cast<double>(s + 1) - 1e-9));
        const double r = R / eta_s;

        std::vector<Candidate> configs;
        configs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Candidate c;
            c.alpha = rng.uniform(bounds.lo[0], bounds.hi[0]);
            c.eta_inf = rng.uniform(bounds.lo[1], bounds.hi[1]);
            configs.push_back(c);
        }

        for (int i = 0; i <= s; ++i) {
            double eta_i = 1.0;
            for (int k = 0; k < i; ++k) eta_i *= eta;
            const auto n_i = static_cast<std::size_t>(static_cast<double>(n) / eta_i + 1e-9);
            const double r_i = std::min(r * eta_i, R);

            std::vector<double> losses(configs.size());
            for (std::size_t j = 0; j < configs.size(); ++j) {
                const double v = objective_at_fidelity(configs[j], r_i);
                losses[j] = std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
            }

            if (r_i >= R * (1.0 - 1e-12)) {
                for (std::size_t j = 0; j < configs.size(); ++j) {
                    if (losses[j] < result.best_loss) {
                        result.best_loss = losses[j];
                        result.best = configs[j];
                    }
                }
            }

            if (i == s) break;
            auto keep = static_cast<std::size_t>(static_cast<double>(n_i) / eta + 1e-9);
            if (keep == 0) keep = 1;
            std::vector<std::size_t> idx(configs.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::stable_sort(idx.begin(), idx.end(),
                             [&](std::size_t a, std::size_t b) { return losses[a] < losses[b]; });
            if (keep < idx.size()) idx.resize(keep);
            std::vector<Candidate> survivors;
            survivors.reserve(idx.size());
            for (auto j : idx) survivors.push_back(configs[j]);
            configs = std::move(survivors);
        }

        result.bracket_history.push_back({bracket_number + 1, result.best_loss, result.best});
    }
    return result;
}

OptimizeResult optimize(const Objective& objective, const SearchBounds& bounds,
                        const OptimizerConfig& cfg, Algorithm algorithm,
                        const FidelityObjective& fidelity) {
    validate_bounds(bounds);
    validate_config(cfg, algorithm);

    Rng rng(cfg.seed);
    OptimizeResult result;

    if (algorithm == Algorithm::hyperband) {
        FidelityObjective fid = fidelity;
        if (!fid) fid = [&objective](Candidate c, double) { return objective(c); };
        HyperbandResult hb = hyperband_run(fid, bounds, cfg.hyperband.max_resource,
                                           cfg.hyperband.halving, rng);
        result.best = hb.best;
        result.history = std::move(hb.bracket_history);
    } else {
        Population pop = init_population(objective, bounds, cfg.population_size, rng);
        PsoSwarm swarm;
        if (algorithm == Algorithm::pso) {
            swarm.pop = std::move(pop);
            const std::size_t n = swarm.pop.candidates.size();
            swarm.velocity.assign(n, Candidate{0.0, 0.0});
            swarm.personal_best = swarm.pop.candidates;
            swarm.personal_best_fitness = swarm.pop.fitness;
            swarm.global_best = swarm.pop.candidates[swarm.pop.best_index];
            swarm.global_best_fitness = swarm.pop.fitness[swarm.pop.best_index];
        }

        result.history.reserve(cfg.max_iterations);
        for (std::size_t it = 1; it <= cfg.max_iterations; ++it) {
            switch (algorithm) {
                case Algorithm::jaya: jaya_step(pop, objective, bounds, rng); break;
                case Algorithm::pso: pso_step(swarm, objective, bounds, rng, cfg.pso); break;
                case Algorithm::ga: ga_step(pop, objective, bounds, rng, cfg.ga); break;
                case Algorithm::hyperband: break;  // handled above
            }
            if (algorithm == Algorithm::pso) {
                result.history.push_back({it, swarm.global_best_fitness, swarm.global_best});
            } else {
                result.history.push_back(
                    {it, pop.fitness[pop.best_index], pop.candidates[pop.best_index]});
            }
        }
        result.best = algorithm == Algorithm::pso ? swarm.global_best
                                                  : pop.candidates[pop.best_index];
    }

    result.best_fitness = sanitized(objective, result.best);
    return result;
}

}  // namespace fskan
