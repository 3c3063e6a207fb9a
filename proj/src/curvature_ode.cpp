#include "transurf/curvature_ode.hpp"
#include "transurf/error.hpp"
#include "transurf/rk4.hpp"

#include <algorithm>
#include <cmath>

namespace transurf {

bool CurvatureProfile::constant() const {
    if (kappa.empty()) return true;
    const auto [lo, hi] = std::minmax_element(kappa.begin(), kappa.end());
    return (*hi - *lo) <= 1e-12 * std::max(1.0, std::abs(*hi));
}

double CurvatureProfile::kappa_second(std::size_t i) const {
    return curvature_rhs(moduli, kappa[i]);
}

double CurvatureProfile::kappa_at(double s) const {
    const double s0 = s_grid.front();
    const double h = step;
    double u = (s - s0) / h;
    std::size_t i = static_cast<std::size_t>(std::clamp(
        u, 0.0, static_cast<double>(size() - 2)));
    i = std::min(i, size() - 2);
    u -= static_cast<double>(i);
    u = std::clamp(u, 0.0, 1.0);

    const double y0 = kappa[i], y1 = kappa[i + 1];
    const double d0 = kappa_prime[i] * h, d1 = kappa_prime[i + 1] * h;
    const double a0 = kappa_second(i) * h * h, a1 = kappa_second(i + 1) * h * h;

    const double u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u;
    const double h00 = 1.0 - 10.0 * u3 + 15.0 * u4 - 6.0 * u5;
    const double h10 = u - 6.0 * u3 + 8.0 * u4 - 3.0 * u5;
    const double h20 = 0.5 * u2 - 1.5 * u3 + 1.5 * u4 - 0.5 * u5;
    const double h21 = 0.5 * u3 - u4 + 0.5 * u5;
    const double h11 = -4.0 * u3 + 7.0 * u4 - 3.0 * u5;
    const double h01 = 10.0 * u3 - 15.0 * u4 + 6.0 * u5;
    return h00 * y0 + h10 * d0 + h20 * a0 + h21 * a1 + h11 * d1 + h01 * y1;
}

double CurvatureProfile::tau_at(double s) const {
    const double k = kappa_at(s);
    return moduli.c1 / (k * k);
}

std::pair<double, double> equilibria(const Moduli& m) {
    const double y_a = std::sqrt(-m.lambda2() * m.lambda3());
    const double y_b = std::sqrt(-m.lambda1() * m.lambda3());
    return std::minmax(y_a, y_b);
}

double band_potential(const Moduli& m, double y) {
    const double y2 = y * y;
    return y2 * y2 + m.c3 * y2 + m.c1 * m.c1 / y2 + m.c1 * m.c2;
}

double first_integral(const Moduli& m, double y, double yp) {
    if (y <= 0.0)
        throw Error(ErrorCode::NonpositiveY, "first integral needs y > 0");
    return yp * yp + band_potential(m, y);
}

double curvature_rhs(const Moduli& m, double y) {
    return -2.0 * y * y * y - m.c3 * y + m.c1 * m.c1 / (y * y * y);
}

CurvatureProfile solve_curvature(const Moduli& m, double y0,
                                 std::pair<double, double> s_span, double h) {
    if (is_double_root(m))
        throw Error(ErrorCode::DoubleRoot,
                    "the ODE has no non-constant solution for a double root");
    const auto [y_low, y_high] = equilibria(m);
    const double f0 = band_potential(m, y0);
    if (!(y0 > 0.0) || f0 >= 0.0)
        throw Error(ErrorCode::InitialValueOutOfBand,
                    "y0 must lie strictly between the equilibria " +
                        std::to_string(y_low) + " and " + std::to_string(y_high));

    const auto [s0, s1] = s_span;
    const std::size_t n = static_cast<std::size_t>(std::llround((s1 - s0) / h));

    CurvatureProfile p;
    p.moduli = m;
    p.step = h;
    p.s_grid.reserve(n + 1);
    p.kappa.reserve(n + 1);
    p.kappa_prime.reserve(n + 1);
    p.tau.reserve(n + 1);
    p.first_integral_residual.reserve(n + 1);

    const auto rhs = [&m](double, const std::array<double, 2>& st) {
        return std::array<double, 2>{st[1], curvature_rhs(m, st[0])};
    };

    std::array<double, 2> state{y0, std::sqrt(-f0)};
    const double guard_lo = 0.5 * y_low, guard_hi = 2.0 * y_high;
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = s0 + static_cast<double>(i) * h;
        const double y = state[0], yp = state[1];
        if (!(y > 0.0) || y < guard_lo || y > guard_hi)
            throw Error(ErrorCode::StepTooLarge,
                        "solution escaped the admissible band; shrink h");
        const double residual = first_integral(m, y, yp);
        if (std::abs(residual) > 1e-5)
            throw Error(ErrorCode::StepTooLarge,
                        "first-integral drift exceeds 1e-5; shrink h");
        p.s_grid.push_back(s);
        p.kappa.push_back(y);
        p.kappa_prime.push_back(yp);
        p.tau.push_back(m.c1 / (y * y));
        p.first_integral_residual.push_back(residual);
        if (i < n) state = rk4_step(rhs, s, h, state);
    }
    return p;
}

CurvatureProfile constant_profile(const Moduli& m,
                                  std::pair<double, double> s_span, double h) {
    const double kappa = std::sqrt(-m.lambda1() * m.lambda3());
    const double tau = -m.lambda1();
    const auto [s0, s1] = s_span;
    const std::size_t n = static_cast<std::size_t>(std::llround((s1 - s0) / h));

    CurvatureProfile p;
    p.moduli = m;
    p.step = h;
    for (std::size_t i = 0; i <= n; ++i) {
        p.s_grid.push_back(s0 + static_cast<double>(i) * h);
        p.kappa.push_back(kappa);
        p.kappa_prime.push_back(0.0);
        p.tau.push_back(tau);
        p.first_integral_residual.push_back(first_integral(m, kappa, 0.0));
    }
    return p;
}

} // namespace transurf
