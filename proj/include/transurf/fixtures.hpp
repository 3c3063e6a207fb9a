#pragma once

#include "transurf/surface.hpp"

#include <cstddef>
#include <utility>

namespace transurf {

/// Scale and family angle of the Scherk surface S_theta. theta = pi/2 is
/// the classical Scherk surface; theta = 0 degenerates to the plane.
struct ScherkParams {
    double c = 1.0;
    double theta = 1.5707963267948966;
};

/// S_theta built from its generating-curve decomposition: alpha in the
/// xz-plane with z = -log(cos(c u))/c, beta over the direction at angle
/// theta with z = +log(cos(c v))/c, both reparameterized to unit speed.
/// Default spans cover the singular interval shrunk by 5 percent.
/// Throws GridHitsSingularity.
TranslationSurface scherk_surface(const ScherkParams& params,
                                  std::size_t grid_n = 41,
                                  std::pair<double, double> u_span = {0.0, 0.0},
                                  std::pair<double, double> v_span = {0.0, 0.0});

/// Psi(s,t) = alpha(s) + alpha(t) for the helix (cos s, sin s, s)/2. The
/// default windows keep s - t away from the degenerate set (multiples of
/// pi*sqrt(2), where the two tangents align).
TranslationSurface helicoid_surface(std::size_t grid_n = 41,
                                    std::pair<double, double> s_span = {0.0, 2.0},
                                    std::pair<double, double> t_span = {2.2, 4.2});

/// Sum of two straight lines; K = H = 0 identically.
/// Throws ParallelDirections.
TranslationSurface plane_surface(const Vec3& u_dir, const Vec3& v_dir,
                                 std::size_t grid_n = 41,
                                 std::pair<double, double> u_span = {0.0, 1.0},
                                 std::pair<double, double> v_span = {0.0, 1.0});

} // namespace transurf
