#pragma once

#include "transurf/curvature_ode.hpp"
#include "transurf/moduli.hpp"

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace transurf {

using Vec3 = Eigen::Vector3d;

/// A space curve sampled on a uniform arc-length grid with its Frenet
/// frames. Immutable after construction; safe to share across threads.
struct SpaceCurve {
    std::vector<double> s_grid;
    std::vector<Vec3> position;
    std::vector<Vec3> tangent;
    std::vector<Vec3> normal;
    std::vector<Vec3> binormal;
    std::vector<double> kappa;
    std::vector<double> tau;

    std::size_t size() const { return s_grid.size(); }
    double step() const { return size() > 1 ? s_grid[1] - s_grid[0] : 0.0; }
};

/// Ellipse semi-axes of the tangent indicatrix,
///   A = sqrt(r3/(r3-r1)), B = sqrt(r3/(r3-r2)),
/// with 0 < A <= B < 1 under the canonical root ordering.
struct AmplitudePair {
    double A = 0.0;
    double B = 0.0;
    double phase_offset = 0.0;
};

AmplitudePair amplitude_constants(const Moduli& m);

/// The phase w(0) compatible with a solution that starts at kappa0 with
/// slope kappa_prime0: sin^2 w = (y_high^2 - kappa0^2)/(y_high^2 - y_low^2)
/// and the quadrant is fixed by the sign of kappa'. Any other choice
/// desynchronizes the tangent ellipse from the curvature and the
/// resulting surface fails to be minimal.
double synchronized_phase(const Moduli& m, double kappa0, double kappa_prime0);

/// Build the generating curve from a curvature profile by integrating
/// the closed-form unit tangent
///   (A cos w, B sin w, sqrt(1 - A^2 cos^2 w - B^2 sin^2 w))
/// jointly with the curvature ODE (one RK4 pass, shared grid). Frames
/// come from analytic differentiation of the tangent formula. The
/// phase starts at synchronized_phase of the profile's initial data.
/// Throws DoubleRoot, NonmonotonePhase.
SpaceCurve construct_generating_curve(const CurvatureProfile& profile);

/// Same, with an explicit phase origin (gauge override; values off the
/// synchronized family w0 + k*pi change the curve's curvature).
SpaceCurve construct_generating_curve(const CurvatureProfile& profile, double w0);

/// Integrate the Frenet system t' = kappa n, n' = -kappa t + tau b,
/// b' = -tau n from the identity frame at s_span.first, position at the
/// origin. The frame is re-orthonormalized each step by the nearest
/// orthogonal (polar) projection. Cross-validation oracle for
/// construct_generating_curve. Throws NonpositiveKappa.
SpaceCurve frenet_reconstruct(const std::function<double(double)>& kappa,
                              const std::function<double(double)>& tau,
                              std::pair<double, double> s_span, double h);

/// Unit-speed circular helix (a cos phi, a sin phi, b phi),
/// phi = s/sqrt(a^2+b^2), with exact analytic frames. kappa = a/(a^2+b^2),
/// tau = b/(a^2+b^2). Throws BadRadius for a <= 0 or b = 0.
SpaceCurve circular_helix(double a, double b,
                          std::pair<double, double> s_span = {0.0, 20.0},
                          double h = 1e-3);

/// Unit-speed straight line through the origin. kappa = 0; frames are
/// completed arbitrarily (constant).
SpaceCurve straight_line(const Vec3& direction,
                         std::pair<double, double> s_span, double h);

/// Generating curve of the Scherk surface, (u, 0, -log(cos(c u))/c),
/// reparameterized to unit speed by cumulative quadrature of the speed
/// and Newton inversion. Arc length s = 0 corresponds to u = 0 when the
/// span contains it. Throws SpanHitsSingularity.
SpaceCurve scherk_curve(double c, std::pair<double, double> u_span,
                        std::size_t n_samples = 2001);

/// Planar Scherk-type generator lying over the horizontal direction
/// (cos dir_angle, sin dir_angle, 0) with z = z_sign * log(cos(c u))/c.
/// scherk_curve(c, span, n) equals scherk_generator(c, 0, -1, span, n).
SpaceCurve scherk_generator(double c, double dir_angle, double z_sign,
                            std::pair<double, double> u_span,
                            std::size_t n_samples = 2001);

/// kappa and tau recovered from positions alone by 5-point finite
/// difference stencils (central in the interior, one-sided at the ends;
/// one-sided rows are flagged low accuracy). Requires >= 7 samples on a
/// uniform grid. Throws GridTooCoarse, DegenerateSecondDerivative.
struct CurvatureTable {
    std::vector<double> s_grid;
    std::vector<double> kappa;
    std::vector<double> tau;
    std::vector<bool> low_accuracy;
};

CurvatureTable curvature_torsion_from_samples(const SpaceCurve& curve);
CurvatureTable curvature_torsion_from_samples(const std::vector<double>& s_grid,
                                              const std::vector<Vec3>& position);

/// Rigid motion of `curve` that maps its s=0 frame and position onto
/// those of `reference`; used to compare congruent curves.
SpaceCurve aligned_to(const SpaceCurve& reference, const SpaceCurve& curve);

/// max_i |a.position[i] - b.position[i]| over the first n common samples.
double max_position_distance(const SpaceCurve& a, const SpaceCurve& b,
                             std::size_t n = 0);

} // namespace transurf
