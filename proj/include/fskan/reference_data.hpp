#pragma once

// Embedded reference values for the ten wedge-flow regimes: published
// wall-shear results from five independent solvers plus, for five regimes,
// reference velocity profiles sampled at ten points of the unit interval.
// The regression tooling compares fresh solves against these offline.

#include <vector>

#include "fskan/optimize.hpp"
#include "fskan/problem.hpp"

namespace fskan {

struct VelocityPoint {
    double xi = 0.0;      // fraction of the reference truncation boundary
    double fp_ref = 0.0;  // reference velocity f' at eta = xi * eta_inf_ref
};

struct ReferenceRecord {
    const char* name = "";  // short regime label for report lines
    WedgeParams params{};
    double alpha_jaya = 0.0;
    double eta_inf_jaya = 0.0;  // the truncation boundary the profiles were sampled at
    double alpha_zhang = 0.0;
    double alpha_asaithambi = 0.0;
    double alpha_pso = 0.0;
    double alpha_hyperband = 0.0;
    double alpha_ga = 0.0;
    std::vector<VelocityPoint> velocity;  // empty when no profile table exists
};

const std::vector<ReferenceRecord>& reference_records();

// The record's wall-shear value from the column matching `alg`.
double alpha_column(const ReferenceRecord& record, Algorithm alg);

}  // namespace fskan
