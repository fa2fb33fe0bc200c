#pragma once

// Regression of fresh solves against the embedded reference records:
// wall shear against the column matching the chosen algorithm, and, where a
// reference velocity profile exists, f' sampled at the tabulated fractions
// of the *reference* truncation boundary.  (The residual is nearly flat in
// eta_inf past the boundary layer, so a solve may legitimately land at a
// different eta_inf; profiles are therefore re-integrated at the reference
// boundary with the solved wall shear before comparing.)

#include <cstddef>
#include <string>
#include <vector>

#include "fskan/reference_data.hpp"
#include "fskan/shooting.hpp"

namespace fskan {

struct RegressCheck {
    std::string quantity;  // "alpha" or "fp@xi=0.3"
    double got = 0.0;
    double want = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct RecordResult {
    std::string regime;
    bool pass = false;
    std::vector<RegressCheck> checks;
};

struct RegressReport {
    std::vector<RecordResult> records;
    bool all_pass = false;
};

// Wall-shear tolerance per algorithm: the tightly reproducible methods get
// 1e-3; the stochastic reconstructions get looser bands.
double alpha_tolerance(Algorithm alg);

inline constexpr double kVelocityTolerance = 1e-3;

RegressReport regress(const std::vector<ReferenceRecord>& records, Algorithm algorithm,
                      const OptimizerConfig& cfg, std::size_t n_steps = kDefaultSteps,
                      const SearchBounds& bounds = {});

}  // namespace fskan
