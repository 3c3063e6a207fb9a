#pragma once

#include "transurf/curvature_ode.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace transurf {

/// The self-adjoint operator attached to a curve point, expressed in the
/// Frenet basis:
///   [ 0      0     kappa   ]
///   [ 0     -tau  -R       ]
///   [ kappa -R     Sigma/tau ]
/// with R = kappa'/kappa + tau'/tau and
/// Sigma = (kappa'/kappa)' + kappa^2 - tau^2. Along a generating curve
/// its spectrum is constant and equals the moduli roots.
struct OperatorSample {
    double s = 0.0;
    Eigen::Matrix3d matrix = Eigen::Matrix3d::Zero();
    std::array<double, 3> eigenvalues{0.0, 0.0, 0.0}; // ascending
    double R = 0.0;
    double Sigma = 0.0;
};

/// Assemble the operator from pointwise curvature data.
/// Throws NonpositiveKappa, ZeroTorsion.
OperatorSample operator_L(double kappa, double kappa_prime, double kappa_second,
                          double tau, double tau_prime, double s = 0.0);

/// Operator samples along a curvature profile (analytic kappa'' and tau'
/// from the ODE; tau' = -2 c1 kappa'/kappa^3).
std::vector<OperatorSample> operator_samples(const CurvatureProfile& profile,
                                             std::size_t stride = 1);

/// Eigenvalues of a symmetric 3x3 matrix by the closed-form
/// trigonometric method, ascending. Deterministic, no iteration.
std::array<double, 3> symmetric3_eigenvalues(const Eigen::Matrix3d& m);

/// Means and standard deviations of the three conserved combinations
///   c1 = kappa^2 tau,  c2 = Sigma/tau - tau,  c3 = -(Sigma + R^2 + kappa^2)
/// across the samples; the deviations are the constancy test.
struct InvariantEstimate {
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double c1_dev = 0.0, c2_dev = 0.0, c3_dev = 0.0;
};

/// From a profile (derivatives of kappa by 5-point stencil on the stored
/// arrays, so the estimate does not assume the ODE was obeyed).
InvariantEstimate extract_invariants(const CurvatureProfile& profile);

/// From raw kappa/tau samples on a uniform grid (cli ingestion path).
/// The first and last two samples use one-sided stencils and are
/// excluded from the statistics.
InvariantEstimate extract_invariants(const std::vector<double>& s_grid,
                                     const std::vector<double>& kappa,
                                     const std::vector<double>& tau);

} // namespace transurf
