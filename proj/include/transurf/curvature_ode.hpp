#pragma once

#include "transurf/moduli.hpp"

#include <utility>
#include <vector>

namespace transurf {

/// Curvature of the generating curve on a uniform arc-length grid,
/// obtained by integrating the autonomous ODE
///   y'^2 + y^4 + c3 y^2 + c1^2/y^2 + c1 c2 = 0
/// in its second-order form. tau is defined pointwise as c1 / kappa^2.
struct CurvatureProfile {
    Moduli moduli;
    double step = 0.0;
    std::vector<double> s_grid;
    std::vector<double> kappa;
    std::vector<double> kappa_prime;
    std::vector<double> tau;
    std::vector<double> first_integral_residual;

    std::size_t size() const { return s_grid.size(); }
    bool constant() const;

    /// kappa'' from the ODE right-hand side; exact on solutions.
    double kappa_second(std::size_t i) const;

    /// Quintic Hermite evaluation of kappa between grid nodes (uses the
    /// stored kappa, kappa' and the analytic kappa''). s is clamped to
    /// the grid span.
    double kappa_at(double s) const;
    double tau_at(double s) const;
};

/// Stationary curvature values (sqrt(-r2 r3), sqrt(-r1 r3)), ascending.
/// They bound the band in which every positive solution oscillates.
std::pair<double, double> equilibria(const Moduli& m);

/// y'^2 + y^4 + c3 y^2 + c1^2/y^2 + c1 c2; zero along exact solutions.
/// Throws NonpositiveY for y <= 0.
double first_integral(const Moduli& m, double y, double yp);

/// F(y) = y^4 + c3 y^2 + c1^2/y^2 + c1 c2, so that y'^2 = -F(y).
double band_potential(const Moduli& m, double y);

/// Second-order right-hand side y'' = -2 y^3 - c3 y + c1^2 / y^3
/// (equals -F'(y)/2; avoids the square-root sign ambiguity at turning
/// points).
double curvature_rhs(const Moduli& m, double y);

/// Integrate the curvature ODE with y(0) = y0, y'(0) = +sqrt(-F(y0))
/// over s in [s_span.first, s_span.second] with fixed step h.
/// Throws DoubleRoot, InitialValueOutOfBand, StepTooLarge.
CurvatureProfile solve_curvature(const Moduli& m, double y0,
                                 std::pair<double, double> s_span, double h);

/// Constant profile kappa = sqrt(-r1 r3), tau = -r1 for double-root
/// moduli (the circular-helix regime).
CurvatureProfile constant_profile(const Moduli& m,
                                  std::pair<double, double> s_span, double h);

} // namespace transurf
