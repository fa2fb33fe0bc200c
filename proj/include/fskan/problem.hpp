#pragma once

// The transformed boundary-layer problem on the unit interval.
//
// The third-order similarity equation f''' + b0*f*f'' + b*(1 - f'^2) = 0 on
// the half line, with f(0)=f'(0)=0 and f'(+inf)=1, is truncated at an unknown
// boundary eta_inf and rescaled by xi = eta/eta_inf onto [0,1].  Carrying
// eta_inf as a constant fourth state component turns the truncated problem
// into the first-order system integrated here; f2 and f3 keep their physical
// meaning (df/deta and d2f/deta2).  The unknowns (alpha, eta_inf) are the
// wall shear f''(0) and the truncation point; both are found by minimizing
// the terminal residual of (f2(1)-1, f3(1)).

#include <stdexcept>
#include <vector>

#include "fskan/ode.hpp"

namespace fskan {

struct WedgeParams {
    double beta0 = 0.5;
    double beta = 0.0;
};

struct Candidate {
    double alpha = 0.0;
    double eta_inf = 1.0;
};

struct ProfileSample {
    double eta = 0.0;
    double f = 0.0;
    double fp = 0.0;
    double fpp = 0.0;
};

inline constexpr State4 rhs(State4 y, WedgeParams p) {
    return {y.f2 * y.f4,
            y.f3 * y.f4,
            -p.beta0 * y.f1 * y.f3 * y.f4 - p.beta * (1.0 - y.f2 * y.f2) * y.f4,
            0.0};
}

inline State4 initial_state(Candidate c) {
    if (!(c.eta_inf > 0.0))
        throw std::invalid_argument("candidate eta_inf must be positive");
    return {0.0, 0.0, c.alpha, c.eta_inf};
}

struct ResidualPair {
    double r1 = 0.0;  // f2(1) - 1
    double r2 = 0.0;  // f3(1)
};

inline constexpr ResidualPair boundary_residual(State4 y_final) {
    return {y_final.f2 - 1.0, y_final.f3};
}

// eta comes from the candidate, not from the integrated f4, so the
// coordinate map carries no accumulated representation error.
inline std::vector<ProfileSample> physical_profile(const std::vector<TrajectorySample>& trajectory,
                                                   Candidate c) {
    std::vector<ProfileSample> out;
    out.reserve(trajectory.size());
    for (const auto& s : trajectory)
        out.push_back({s.xi * c.eta_inf, s.y.f1, s.y.f2, s.y.f3});
    return out;
}

}  // namespace fskan
