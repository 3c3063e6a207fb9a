#include <doctest.h>

#include "transurf/error.hpp"
#include "transurf/invariants.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace transurf;

TEST_CASE("helix operator: matrix entries and spectrum by hand") {
    const OperatorSample s = operator_L(1.0, 0.0, 0.0, 1.0, 0.0);
    CHECK(s.R == 0.0);
    CHECK(s.Sigma == 0.0);
    Eigen::Matrix3d expected;
    expected << 0, 0, 1, 0, -1, 0, 1, 0, 0;
    CHECK((s.matrix - expected).norm() == 0.0);
    // the trig formula loses ~sqrt(eps) at the double eigenvalue
    CHECK(std::abs(s.eigenvalues[0] - (-1.0)) <= 1e-7);
    CHECK(std::abs(s.eigenvalues[1] - (-1.0)) <= 1e-7);
    CHECK(std::abs(s.eigenvalues[2] - 1.0) <= 1e-7);
}

TEST_CASE("operator rejects planar and degenerate input") {
    CHECK_THROWS_AS(operator_L(1.0, 0.0, 0.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(operator_L(0.0, 0.0, 0.0, 1.0, 0.0), Error);
    try {
        operator_L(1.0, 0.0, 0.0, 0.0, 0.0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroTorsion);
    }
}

TEST_CASE("spectrum is constant along the example-2 curve") {
    const Moduli m = coefficients_from_roots(-4, -1, 1);
    const CurvatureProfile profile = solve_curvature(m, 1.3, {0.0, 20.0}, 1e-3);
    const auto samples = operator_samples(profile, 2000); // 11 sample points
    REQUIRE(samples.size() >= 10);

    for (int k = 0; k < 3; ++k) {
        double lo = 1e300, hi = -1e300;
        for (const auto& s : samples) {
            lo = std::min(lo, s.eigenvalues[k]);
            hi = std::max(hi, s.eigenvalues[k]);
            CHECK(std::abs(s.eigenvalues[k] - m.roots[k]) <= 1e-6);
            // eigenvalues satisfy the characteristic cubic
            CHECK(std::abs(m.characteristic(s.eigenvalues[k])) <= 1e-8);
        }
        CHECK(hi - lo <= 1e-6);
    }
}

TEST_CASE("analytic symmetric eigenvalues match an iterative solver") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
        Eigen::Matrix3d m;
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng), e = u(rng),
                     f = u(rng);
        m << a, b, c, b, d, e, c, e, f;
        const auto eig = symmetric3_eigenvalues(m);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m);
        for (int k = 0; k < 3; ++k)
            CHECK(std::abs(eig[k] - solver.eigenvalues()[k]) <=
                  1e-10 * std::max(1.0, std::abs(solver.eigenvalues()[k])));
    }
    // diagonal fast path
    Eigen::Matrix3d diag = Eigen::Vector3d(3.0, -2.0, 7.0).asDiagonal();
    const auto eig = symmetric3_eigenvalues(diag);
    CHECK(eig[0] == -2.0);
    CHECK(eig[1] == 3.0);
    CHECK(eig[2] == 7.0);
}

TEST_CASE("invariant extraction recovers the moduli") {
    const Moduli m = coefficients_from_roots(-4, -1, 1);
    const CurvatureProfile profile = solve_curvature(m, 1.3, {0.0, 20.0}, 1e-3);
    const InvariantEstimate est = extract_invariants(profile);
    CHECK(std::abs(est.c1 - 4.0) <= 1e-5);
    CHECK(std::abs(est.c2 - (-4.0)) <= 1e-5);
    CHECK(std::abs(est.c3 - (-1.0)) <= 1e-5);
    CHECK(est.c1_dev <= 1e-6);
    CHECK(est.c2_dev <= 1e-6);
    CHECK(est.c3_dev <= 1e-6);
}

TEST_CASE("invariant extraction on the constant helix data") {
    const Moduli m = coefficients_from_roots(-1, -1, 1);
    const CurvatureProfile profile = constant_profile(m, {0.0, 5.0}, 1e-3);
    const InvariantEstimate est = extract_invariants(profile);
    CHECK(est.c1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.c2 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(est.c3 == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("scaled curvature is detected as non-solution") {
    const Moduli m = coefficients_from_roots(-4, -1, 1);
    CurvatureProfile profile = solve_curvature(m, 1.3, {0.0, 20.0}, 1e-3);
    for (double& k : profile.kappa) k *= 1.01;
    const InvariantEstimate est = extract_invariants(profile);
    const double worst = std::max({est.c1_dev, est.c2_dev, est.c3_dev});
    CHECK(worst > 1e-3);
}
