#pragma once

// Fixed-step classical fourth-order Runge-Kutta on a 4-component state over
// a finite interval.  The vector field is a template parameter so the hot
// integration loop inlines; everything here is a pure function of its
// arguments.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fskan {

struct State4 {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
    double f4 = 0.0;  // constant along any trajectory whose field has zero 4th component

    friend constexpr State4 operator+(State4 a, State4 b) {
        return {a.f1 + b.f1, a.f2 + b.f2, a.f3 + b.f3, a.f4 + b.f4};
    }
    friend constexpr State4 operator*(double c, State4 a) {
        return {c * a.f1, c * a.f2, c * a.f3, c * a.f4};
    }
    friend constexpr bool operator==(State4 a, State4 b) {
        return a.f1 == b.f1 && a.f2 == b.f2 && a.f3 == b.f3 && a.f4 == b.f4;
    }
};

inline bool finite(State4 y) {
    return std::isfinite(y.f1) && std::isfinite(y.f2) && std::isfinite(y.f3) &&
           std::isfinite(y.f4);
}

struct Grid {
    double t0 = 0.0;
    double t1 = 1.0;
    std::size_t n_steps = 1000;

    Grid() = default;
    Grid(double start, double end, std::size_t steps) : t0(start), t1(end), n_steps(steps) {
        if (!(t0 < t1) || n_steps < 1)
            throw std::invalid_argument("grid requires t0 < t1 and n_steps >= 1");
    }

    double h() const { return (t1 - t0) / static_cast<double>(n_steps); }
};

template <class Rhs>
State4 rk4_step(Rhs&& rhs, double t, State4 y, double h) {
    const State4 k1 = h * rhs(t, y);
    const State4 k2 = h * rhs(t + h / 2, y + 0.5 * k1);
    const State4 k3 = h * rhs(t + h / 2, y + 0.5 * k2);
    const State4 k4 = h * rhs(t + h, y + k3);
    return y + (1.0 / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

struct TrajectorySample {
    double xi = 0.0;
    State4 y{};
};

// On non-finite state: where the integration died.
struct IntegrationFailure {
    std::size_t step = 0;  // index of the step whose result was non-finite
    double xi = 0.0;       // coordinate at that result
};

struct IntegrationResult {
    State4 final_state{};
    std::vector<TrajectorySample> trajectory;  // n_steps+1 samples when recorded
    std::optional<IntegrationFailure> failure;

    bool ok() const { return !failure.has_value(); }
};

template <class Rhs>
IntegrationResult integrate(Rhs&& rhs, const Grid& grid, State4 y0, bool record = false) {
    IntegrationResult out;
    const double h = grid.h();
    State4 y = y0;
    if (record) {
        out.trajectory.reserve(grid.n_steps + 1);
        out.trajectory.push_back({grid.t0, y});
    }
    if (!finite(y)) {
        out.final_state = y;
        out.failure = IntegrationFailure{0, grid.t0};
        return out;
    }
    for (std::size_t i = 0; i < grid.n_steps; ++i) {
        // coordinates by index multiplication, so the last one is exactly t1
        const double t = grid.t0 + static_cast<double>(i) * h;
        const double t_next =
            (i + 1 == grid.n_steps) ? grid.t1 : grid.t0 + static_cast<double>(i + 1) * h;
        y = rk4_step(rhs, t, y, h);
        if (!finite(y)) {
            out.final_state = y;
            out.failure = IntegrationFailure{i + 1, t_next};
            return out;
        }
        if (record) out.trajectory.push_back({t_next, y});
    }
    out.final_state = y;
    return out;
}

}  // namespace fskan
