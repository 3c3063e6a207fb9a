#include "transurf/invariants.hpp"
#include "transurf/error.hpp"

#include <algorithm>
#include <cmath>

namespace transurf {

std::array<double, 3> symmetric3_eigenvalues(const Eigen::Matrix3d& m) {
    const double p1 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);
    std::array<double, 3> eig;
    if (p1 == 0.0) {
        eig = {m(0, 0), m(1, 1), m(2, 2)};
        std::sort(eig.begin(), eig.end());
        return eig;
    }
    const double q = m.trace() / 3.0;
    const double p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) +
                      (m(2, 2) - q) * (m(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Eigen::Matrix3d b = (m - q * Eigen::Matrix3d::Identity()) / p;
    double r = b.determinant() / 2.0;
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    constexpr double two_pi_3 = 2.0943951023931953;
    const double e_hi = q + 2.0 * p * std::cos(phi);
    const double e_lo = q + 2.0 * p * std::cos(phi + two_pi_3);
    eig = {e_lo, 3.0 * q - e_hi - e_lo, e_hi};
    return eig;
}

OperatorSample operator_L(double kappa, double kappa_prime, double kappa_second,
                          double tau, double tau_prime, double s) {
    if (!(kappa > 0.0))
        throw Error(ErrorCode::NonpositiveKappa, "operator needs kappa > 0");
    if (tau == 0.0)
        throw Error(ErrorCode::ZeroTorsion,
                    "operator undefined for planar curves (Sigma/tau entry)");

    OperatorSample sample;
    sample.s = s;
    const double ratio = kappa_prime / kappa;
    sample.R = ratio + tau_prime / tau;
    sample.Sigma = kappa_second / kappa - ratio * ratio + kappa * kappa - tau * tau;

    Eigen::Matrix3d m;
    m << 0.0, 0.0, kappa,
         0.0, -tau, -sample.R,
         kappa, -sample.R, sample.Sigma / tau;
    sample.matrix = m;
    sample.eigenvalues = symmetric3_eigenvalues(m);
    return sample;
}

std::vector<OperatorSample> operator_samples(const CurvatureProfile& profile,
                                             std::size_t stride) {
    const double c1 = profile.moduli.c1;
    std::vector<OperatorSample> out;
    const std::size_t step = std::max<std::size_t>(stride, 1);
    for (std::size_t i = 0; i < profile.size(); i += step) {
        const double k = profile.kappa[i];
        const double kp = profile.kappa_prime[i];
        const double tau = profile.tau[i];
        const double tau_prime = -2.0 * c1 * kp / (k * k * k);
        out.push_back(operator_L(k, kp, profile.kappa_second(i), tau, tau_prime,
                                 profile.s_grid[i]));
    }
    return out;
}

namespace {

struct MeanDev {
    double mean = 0.0;
    double dev = 0.0;
};

MeanDev mean_dev(const std::vector<double>& v) {
    MeanDev md;
    if (v.empty()) return md;
    for (double x : v) md.mean += x;
    md.mean /= static_cast<double>(v.size());
    for (double x : v) md.dev += (x - md.mean) * (x - md.mean);
    md.dev = std::sqrt(md.dev / static_cast<double>(v.size()));
    return md;
}

} // namespace

InvariantEstimate extract_invariants(const std::vector<double>& s_grid,
                                     const std::vector<double>& kappa,
                                     const std::vector<double>& tau) {
    const std::size_t n = s_grid.size();
    if (n < 7)
        throw Error(ErrorCode::GridTooCoarse, "need at least 7 samples");
    const double h = s_grid[1] - s_grid[0];

    std::vector<double> v1, v2, v3;
    v1.reserve(n);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double k = kappa[i];
        const double t = tau[i];
        const double kp =
            (kappa[i - 2] - 8.0 * kappa[i - 1] + 8.0 * kappa[i + 1] - kappa[i + 2]) /
            (12.0 * h);
        const double kpp = (-kappa[i - 2] + 16.0 * kappa[i - 1] - 30.0 * kappa[i] +
                            16.0 * kappa[i + 1] - kappa[i + 2]) /
                           (12.0 * h * h);
        const double tp =
            (tau[i - 2] - 8.0 * tau[i - 1] + 8.0 * tau[i + 1] - tau[i + 2]) /
            (12.0 * h);
        const double ratio = kp / k;
        const double R = ratio + tp / t;
        const double Sigma = kpp / k - ratio * ratio + k * k - t * t;
        v1.push_back(k * k * t);
        v2.push_back(Sigma / t - t);
        v3.push_back(-(Sigma + R * R + k * k));
    }

    const MeanDev m1 = mean_dev(v1), m2 = mean_dev(v2), m3 = mean_dev(v3);
    return {m1.mean, m2.mean, m3.mean, m1.dev, m2.dev, m3.dev};
}

InvariantEstimate extract_invariants(const CurvatureProfile& profile) {
    return extract_invariants(profile.s_grid, profile.kappa, profile.tau);
}

} // namespace transurf
