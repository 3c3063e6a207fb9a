#include "transurf/surface.hpp"
#include "transurf/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace transurf {

std::size_t TranslationSurface::degenerate_count() const {
    return static_cast<std::size_t>(
        std::count(degenerate.begin(), degenerate.end(), true));
}

double TranslationSurface::max_abs_mean_curvature() const {
    double m = 0.0;
    for (std::size_t k = 0; k < mean_H.size(); ++k)
        if (!degenerate[k]) m = std::max(m, std::abs(mean_H[k]));
    return m;
}

double TranslationSurface::max_gauss_curvature() const {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < gauss_K.size(); ++k)
        if (!degenerate[k]) m = std::max(m, gauss_K[k]);
    return m;
}

TranslationSurface surface_from_curves(const SpaceCurve& alpha,
                                       const SpaceCurve& beta,
                                       double sin_phi_min) {
    TranslationSurface surf;
    surf.alpha = alpha;
    surf.beta = beta;
    surf.sin_phi_min = sin_phi_min;
    surf.s_grid = alpha.s_grid;
    surf.t_grid = beta.s_grid;

    const std::size_t ns = alpha.size(), nt = beta.size();
    const std::size_t total = ns * nt;
    surf.position.resize(total);
    surf.normal.assign(total, Vec3::Zero());
    surf.cos_phi.resize(total);
    surf.sin_phi.resize(total);
    surf.first_E.assign(total, 1.0);
    surf.first_F.resize(total);
    surf.first_G.assign(total, 1.0);
    surf.second_l.assign(total, 0.0);
    surf.second_m.assign(total, 0.0);
    surf.second_n.assign(total, 0.0);
    surf.gauss_K.assign(total, 0.0);
    surf.mean_H.assign(total, 0.0);
    surf.degenerate.assign(total, false);

    for (std::size_t i = 0; i < ns; ++i) {
        const Vec3& ta = alpha.tangent[i];
        const Vec3& ba = alpha.binormal[i];
        const double ka = alpha.kappa[i];
        for (std::size_t j = 0; j < nt; ++j) {
            const std::size_t k = i * nt + j;
            const Vec3& tb = beta.tangent[j];
            const Vec3& bb = beta.binormal[j];
            const double kb = beta.kappa[j];

            surf.position[k] = alpha.position[i] + beta.position[j];
            const double c = ta.dot(tb);
            const double s2 = std::max(1.0 - c * c, 0.0);
            const double sp = std::sqrt(s2);
            surf.cos_phi[k] = c;
            surf.sin_phi[k] = sp;
            surf.first_F[k] = c;
            if (sp < sin_phi_min) {
                surf.degenerate[k] = true;
                continue;
            }
            surf.normal[k] = ta.cross(tb) / sp;
            const double ba_tb = ba.dot(tb);
            const double ta_bb = ta.dot(bb);
            surf.second_l[k] = -ka / sp * ba_tb;
            surf.second_n[k] = kb / sp * ta_bb;
            surf.gauss_K[k] = -ka * kb / (s2 * s2) * ba_tb * ta_bb;
            surf.mean_H[k] = (-ka * ba_tb + kb * ta_bb) / (2.0 * s2 * sp);
        }
    }
    return surf;
}

SpaceCurve subsample(const SpaceCurve& curve, std::size_t target_nodes) {
    const std::size_t n = curve.size();
    if (target_nodes < 2 || target_nodes >= n) return curve;
    SpaceCurve out;
    const double scale = static_cast<double>(n - 1) /
                         static_cast<double>(target_nodes - 1);
    for (std::size_t k = 0; k < target_nodes; ++k) {
        const std::size_t i = static_cast<std::size_t>(
            std::llround(static_cast<double>(k) * scale));
        out.s_grid.push_back(curve.s_grid[i]);
        out.position.push_back(curve.position[i]);
        out.tangent.push_back(curve.tangent[i]);
        out.normal.push_back(curve.normal[i]);
        out.binormal.push_back(curve.binormal[i]);
        out.kappa.push_back(curve.kappa[i]);
        out.tau.push_back(curve.tau[i]);
    }
    return out;
}

double minimality_residual(const SpaceCurve& alpha, const SpaceCurve& beta) {
    double r = 0.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const Vec3& ta = alpha.tangent[i];
        const Vec3& ba = alpha.binormal[i];
        const double ka = alpha.kappa[i];
        for (std::size_t j = 0; j < beta.size(); ++j) {
            const double v = ka * ba.dot(beta.tangent[j]) -
                             beta.kappa[j] * ta.dot(beta.binormal[j]);
            r = std::max(r, std::abs(v));
        }
    }
    return r;
}

namespace {

struct Derivatives {
    std::vector<Vec3> d1;
    std::vector<Vec3> d2;
};

/// Central 5-point first and second derivatives on the interior range
/// [2, n-3]; boundary rows stay zero and are excluded from residual maxima.
Derivatives stencil_derivatives(const std::vector<double>& param,
                                const std::vector<Vec3>& pos) {
    const std::size_t n = param.size();
    if (n < 5 || pos.size() != n)
        throw Error(ErrorCode::GridTooCoarse, "need at least 5 uniform samples");
    const double h = param[1] - param[0];
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs((param[i] - param[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw Error(ErrorCode::GridTooCoarse, "grid is not uniform");

    Derivatives d;
    d.d1.assign(n, Vec3::Zero());
    d.d2.assign(n, Vec3::Zero());
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d.d1[i] = (pos[i - 2] - 8.0 * pos[i - 1] + 8.0 * pos[i + 1] - pos[i + 2]) /
                  (12.0 * h);
        d.d2[i] = (-pos[i - 2] + 16.0 * pos[i - 1] - 30.0 * pos[i] +
                   16.0 * pos[i + 1] - pos[i + 2]) /
                  (12.0 * h * h);
    }
    return d;
}

} // namespace

double minimality_residual_general(const std::vector<double>& param_a,
                                   const std::vector<Vec3>& pos_a,
                                   const std::vector<double>& param_b,
                                   const std::vector<Vec3>& pos_b,
                                   std::size_t node_stride) {
    const Derivatives da = stencil_derivatives(param_a, pos_a);
    const Derivatives db = stencil_derivatives(param_b, pos_b);
    const std::size_t stride = std::max<std::size_t>(node_stride, 1);

    double r = 0.0;
    for (std::size_t i = 2; i + 2 < pos_a.size(); i += stride) {
        const Vec3 cross_a = da.d1[i].cross(da.d2[i]);
        const double speed2_a = da.d1[i].squaredNorm();
        for (std::size_t j = 2; j + 2 < pos_b.size(); j += stride) {
            const Vec3 cross_b = db.d1[j].cross(db.d2[j]);
            const double speed2_b = db.d1[j].squaredNorm();
            const double v = speed2_b * cross_a.dot(db.d1[j]) -
                             speed2_a * da.d1[i].dot(cross_b);
            r = std::max(r, std::abs(v));
        }
    }
    return r;
}

} // namespace transurf
