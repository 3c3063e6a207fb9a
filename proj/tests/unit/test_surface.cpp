#include <doctest.h>

#include "transurf/curve.hpp"
#include "transurf/error.hpp"
#include "transurf/surface.hpp"

#include <cmath>

using namespace transurf;

namespace {

SpaceCurve example2_curve(double span = 20.0) {
    const Moduli m = coefficients_from_roots(-4, -1, 1);
    return construct_generating_curve(solve_curvature(m, 1.3, {0.0, span}, 1e-3));
}

} // namespace

TEST_CASE("helicoid pair: H vanishes, K negative off the degenerate set") {
    const SpaceCurve a = circular_helix(0.5, 0.5, {0.0, 6.0}, 0.05);
    const TranslationSurface surf = surface_from_curves(a, a);

    CHECK(surf.max_abs_mean_curvature() <= 1e-10);
    for (std::size_t k = 0; k < surf.gauss_K.size(); ++k)
        if (!surf.degenerate[k]) CHECK(surf.gauss_K[k] < 0.0);
    // diagonal nodes have parallel tangents
    CHECK(surf.degenerate_count() > 0);
}

TEST_CASE("plane: flat and regular") {
    const SpaceCurve a = straight_line(Vec3(1, 0, 0), {0.0, 1.0}, 0.05);
    const SpaceCurve b = straight_line(Vec3(0, 1, 0), {0.0, 1.0}, 0.05);
    const TranslationSurface surf = surface_from_curves(a, b);
    CHECK(surf.max_abs_mean_curvature() == 0.0);
    CHECK(surf.max_gauss_curvature() == 0.0);
    CHECK(surf.degenerate_count() == 0);
}

TEST_CASE("example-2 surface is minimal to integrator accuracy") {
    const SpaceCurve thin = subsample(example2_curve(), 101);
    REQUIRE(thin.size() == 101);
    const TranslationSurface surf = surface_from_curves(thin, thin);
    CHECK(surf.max_abs_mean_curvature() <= 1e-5);
    CHECK(surf.max_gauss_curvature() <= 1e-8);
}

TEST_CASE("first and second form fields match their defining identities") {
    const SpaceCurve thin = subsample(example2_curve(10.0), 41);
    const TranslationSurface surf = surface_from_curves(thin, thin);

    double herr = 0.0;
    for (std::size_t i = 0; i < surf.rows(); ++i)
        for (std::size_t j = 0; j < surf.cols(); ++j) {
            const std::size_t k = surf.index(i, j);
            CHECK(surf.first_E[k] == 1.0);
            CHECK(surf.first_G[k] == 1.0);
            CHECK(surf.second_m[k] == 0.0);
            CHECK(surf.first_F[k] ==
                  doctest::Approx(thin.tangent[i].dot(thin.tangent[j]))
                      .epsilon(1e-14));
            if (surf.degenerate[k]) continue;
            // H from the form coefficients: (lG - 2mF + nE) / (2(EG - F^2))
            const double forms =
                (surf.second_l[k] + surf.second_n[k]) /
                (2.0 * (1.0 - surf.first_F[k] * surf.first_F[k]));
            herr = std::max(herr, std::abs(forms - surf.mean_H[k]));
            // normal is unit and orthogonal to both tangents
            CHECK(std::abs(surf.normal[k].norm() - 1.0) <= 1e-11);
            CHECK(std::abs(surf.normal[k].dot(thin.tangent[i])) <= 1e-11);
            CHECK(std::abs(surf.normal[k].dot(thin.tangent[j])) <= 1e-11);
        }
    CHECK(herr <= 1e-10);
}

TEST_CASE("swapping the generators transposes and flips H") {
    const SpaceCurve a = circular_helix(0.5, 0.5, {0.0, 2.0}, 0.05);
    const SpaceCurve b = circular_helix(0.5, 0.4, {2.5, 4.5}, 0.05);
    const TranslationSurface ab = surface_from_curves(a, b);
    const TranslationSurface ba = surface_from_curves(b, a);
    REQUIRE(ab.rows() == ba.cols());
    for (std::size_t i = 0; i < ab.rows(); ++i)
        for (std::size_t j = 0; j < ab.cols(); ++j) {
            const std::size_t k = ab.index(i, j), kt = ba.index(j, i);
            if (ab.degenerate[k] || ba.degenerate[kt]) continue;
            CHECK(ab.mean_H[k] == doctest::Approx(-ba.mean_H[kt]).epsilon(1e-12));
            CHECK(ab.gauss_K[k] == doctest::Approx(ba.gauss_K[kt]).epsilon(1e-12));
            CHECK((ab.normal[k] + ba.normal[kt]).norm() <= 1e-12);
        }
}

TEST_CASE("unit-speed minimality residual: positives and negative control") {
    const SpaceCurve helix = circular_helix(0.5, 0.5, {0.0, 10.0}, 0.05);
    CHECK(minimality_residual(helix, helix) <= 1e-10);

    // Scherk decomposition: alpha in xz, beta rotated by pi/2 with the
    // opposite log sign.
    const SpaceCurve sa = scherk_curve(1.0, {-1.3, 1.3}, 201);
    const SpaceCurve sb =
        scherk_generator(1.0, 1.5707963267948966, +1.0, {-1.3, 1.3}, 201);
    CHECK(minimality_residual(sa, sb) <= 1e-6);

    const SpaceCurve perturbed = circular_helix(0.5, 0.55, {0.0, 10.0}, 0.05);
    CHECK(minimality_residual(helix, perturbed) > 1e-3);
}

TEST_CASE("general-parameterization residual on the Scherk graph") {
    // alpha(u) = (u, 0, -log cos u), beta(v) = (0, v, +log cos v)
    std::vector<double> pu, pv;
    std::vector<Vec3> a, b, b_scaled;
    const int n = 801;
    for (int i = 0; i < n; ++i) {
        const double u = -1.2 + 2.4 * i / (n - 1);
        pu.push_back(u);
        pv.push_back(u);
        a.emplace_back(u, 0.0, -std::log(std::cos(u)));
        b.emplace_back(0.0, u, std::log(std::cos(u)));
        b_scaled.emplace_back(0.0, u, 2.0 * std::log(std::cos(u)));
    }
    CHECK(minimality_residual_general(pu, a, pv, b, 4) <= 1e-6);
    CHECK(minimality_residual_general(pu, a, pv, b_scaled, 4) > 1e-3);

    // straight lines: both second derivatives vanish identically
    std::vector<Vec3> la, lb;
    for (int i = 0; i < 21; ++i) {
        la.emplace_back(0.1 * i, 0.0, 0.0);
        lb.emplace_back(0.0, 0.1 * i, 0.0);
    }
    std::vector<double> lp;
    for (int i = 0; i < 21; ++i) lp.push_back(0.1 * i);
    CHECK(minimality_residual_general(lp, la, lp, lb) == 0.0);

    std::vector<double> tiny{0.0, 0.1, 0.2};
    std::vector<Vec3> tinyp{{0, 0, 0}, {0.1, 0, 0}, {0.2, 0, 0}};
    CHECK_THROWS_AS(minimality_residual_general(tiny, tinyp, tiny, tinyp), Error);
}

TEST_CASE("subsample keeps endpoints and strides evenly") {
    const SpaceCurve c = circular_helix(0.5, 0.5, {0.0, 20.0}, 1e-3);
    const SpaceCurve thin = subsample(c, 101);
    REQUIRE(thin.size() == 101);
    CHECK(thin.s_grid.front() == c.s_grid.front());
    CHECK(thin.s_grid.back() == c.s_grid.back());
    CHECK(thin.s_grid[1] == doctest::Approx(0.2).epsilon(1e-12));
}
