#pragma once

#include "transurf/curve.hpp"

#include <cstddef>
#include <vector>

namespace transurf {

/// Translation surface Psi(s,t) = alpha(s) + beta(t) evaluated on the
/// product of the two curves' sample grids. Fields are stored row-major
/// with s as the major (row) index. Nodes where sin(phi) falls below
/// sin_phi_min are flagged degenerate and excluded from residual maxima
/// (the parameterization is singular there, e.g. on the diagonal of any
/// alpha + alpha surface).
struct TranslationSurface {
    SpaceCurve alpha;
    SpaceCurve beta;
    double sin_phi_min = 1e-3;

    std::vector<double> s_grid;
    std::vector<double> t_grid;
    std::vector<Vec3> position;
    std::vector<Vec3> normal;       // t_alpha x t_beta / sin(phi); zero at degenerate nodes
    std::vector<double> cos_phi;
    std::vector<double> sin_phi;
    std::vector<double> first_E, first_F, first_G;
    std::vector<double> second_l, second_m, second_n;
    std::vector<double> gauss_K;
    std::vector<double> mean_H;
    std::vector<bool> degenerate;

    std::size_t rows() const { return s_grid.size(); }
    std::size_t cols() const { return t_grid.size(); }
    std::size_t index(std::size_t i, std::size_t j) const { return i * cols() + j; }

    std::size_t degenerate_count() const;
    /// Maxima over non-degenerate nodes.
    double max_abs_mean_curvature() const;
    double max_gauss_curvature() const;
};

/// Evaluate all node fields of Psi = alpha + beta. Both curves must be
/// unit speed with valid frames; the grids need not match in length.
/// Degenerate nodes are flagged, never fatal.
TranslationSurface surface_from_curves(const SpaceCurve& alpha,
                                       const SpaceCurve& beta,
                                       double sin_phi_min = 1e-3);

/// Every n-th sample of a curve (keeps endpoints when they land on the
/// stride); used to thin dense ODE output before the O(n*m) surface pass.
SpaceCurve subsample(const SpaceCurve& curve, std::size_t target_nodes);

/// max over the grid of |kappa_a <b_a, t_b> - kappa_b <t_a, b_b>|.
/// Vanishes exactly on minimal surfaces; no division by sin^3(phi), so
/// degenerate nodes need no special casing.
double minimality_residual(const SpaceCurve& alpha, const SpaceCurve& beta);

/// Arbitrary-parameterization minimality residual from positions alone:
/// max of | |b'|^2 <a' x a'', b'> - |a'|^2 <a', b' x b''> | with the
/// derivatives taken by 5-point stencils. node_stride thins the pair
/// grid (derivatives always use the full resolution).
double minimality_residual_general(const std::vector<double>& param_a,
                                   const std::vector<Vec3>& pos_a,
                                   const std::vector<double>& param_b,
                                   const std::vector<Vec3>& pos_b,
                                   std::size_t node_stride = 1);

} // namespace transurf
