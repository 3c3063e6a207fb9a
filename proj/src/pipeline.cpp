#include "transurf/pipeline.hpp"
#include "transurf/error.hpp"
#include "transurf/invariants.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace transurf {

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

/// Residual checks shared by the generic and the helix pipeline paths.
void add_profile_checks(VerificationReport& report, const CurvatureProfile& profile,
                        const SpaceCurve& curve) {
    const Moduli& m = profile.moduli;

    double unit_speed = 0.0;
    for (const Vec3& t : curve.tangent)
        unit_speed = std::max(unit_speed, std::abs(t.norm() - 1.0));
    report.add("unit_speed", unit_speed, tolerances::unit_speed);

    double k2t = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i)
        k2t = std::max(k2t, std::abs(curve.kappa[i] * curve.kappa[i] * curve.tau[i] -
                                     (m.mirrored ? -m.c1 : m.c1)));
    report.add("kappa_sq_tau", k2t, tolerances::kappa_sq_tau_rel * std::abs(m.c1));

    // Sigma and R from the profile's kappa, kappa' and the analytic kappa''.
    double sigma_rel = 0.0, c3_rel = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const double k = profile.kappa[i], kp = profile.kappa_prime[i];
        const double t = profile.tau[i];
        const double tp = -2.0 * m.c1 * kp / (k * k * k);
        const double ratio = kp / k;
        const double R = ratio + tp / t;
        const double Sigma =
            profile.kappa_second(i) / k - ratio * ratio + k * k - t * t;
        sigma_rel = std::max(sigma_rel, std::abs(Sigma / t - t - m.c2));
        c3_rel = std::max(c3_rel, std::abs(Sigma + R * R + k * k + m.c3));
    }
    report.add("sigma_relation", sigma_rel, tolerances::sigma_relation);
    report.add("c3_relation", c3_rel, tolerances::c3_relation);

    report.add("first_integral", max_abs(profile.first_integral_residual),
               tolerances::first_integral);

    const auto [y_low, y_high] = equilibria(m);
    const auto [k_min, k_max] =
        std::minmax_element(profile.kappa.begin(), profile.kappa.end());
    const double band = std::max({y_low - *k_min, *k_max - y_high, 0.0});
    report.add("band_confinement", band, tolerances::band_confinement);

    // Spectrum of the self-adjoint operator: range across samples plus
    // distance to the moduli roots.
    const auto samples = operator_samples(profile);
    double eigen_err = 0.0;
    for (int k = 0; k < 3; ++k) {
        double lo = samples.front().eigenvalues[k], hi = lo;
        for (const auto& s : samples) {
            lo = std::min(lo, s.eigenvalues[k]);
            hi = std::max(hi, s.eigenvalues[k]);
        }
        eigen_err = std::max({eigen_err, hi - lo,
                              std::abs(0.5 * (hi + lo) - m.roots[k])});
    }
    report.add("eigen_constancy", eigen_err, tolerances::eigen_constancy);
}

void add_surface_checks(VerificationReport& report, const TranslationSurface& surf) {
    report.add("mean_curvature_max", surf.max_abs_mean_curvature(),
               tolerances::mean_curvature_max);
    report.add("gauss_sign", surf.max_gauss_curvature(), tolerances::gauss_sign);
    if (surf.degenerate_count() > 0)
        report.flags.push_back(std::to_string(surf.degenerate_count()) +
                               " degenerate node(s) excluded (sin phi < " +
                               std::to_string(surf.sin_phi_min) + ")");
}

} // namespace

ConstructResult run_construction(const ConstructOptions& options) {
    ConstructResult result;
    result.moduli = options.moduli;
    const Moduli& m = result.moduli;

    if (is_double_root(m)) {
        // Only the constant solution exists: kappa^2 = -r1 r3, tau = -r1.
        result.helix_path = true;
        result.profile = constant_profile(m, options.span, options.step);
        const double kappa = result.profile.kappa.front();
        double tau = result.profile.tau.front();
        if (m.mirrored) tau = -tau;
        const double denom = kappa * kappa + tau * tau;
        result.curve = circular_helix(kappa / denom, tau / denom, options.span,
                                      options.step);
    } else {
        result.profile = solve_curvature(m, options.y0, options.span, options.step);
        result.curve = options.w0
                           ? construct_generating_curve(result.profile, *options.w0)
                           : construct_generating_curve(result.profile);
    }

    const SpaceCurve thin = subsample(result.curve, options.grid_n);
    result.surface = surface_from_curves(thin, thin);

    VerificationReport& report = result.report;
    nlohmann::ordered_json inputs;
    inputs["moduli"] = nlohmann::ordered_json::parse(to_json(m));
    inputs["y0"] = options.y0;
    inputs["span"] = {options.span.first, options.span.second};
    inputs["step"] = options.step;
    inputs["grid"] = {options.grid_n, options.grid_n};
    if (options.w0) inputs["w0"] = *options.w0;
    inputs["helix_path"] = result.helix_path;
    report.inputs_json = inputs.dump();

    add_profile_checks(report, result.profile, result.curve);
    add_surface_checks(report, result.surface);
    if (result.helix_path)
        report.flags.push_back("double root: routed to the circular-helix path");
    return result;
}

VerificationReport fixture_report(const TranslationSurface& surface,
                                  double h_tolerance,
                                  const std::string& inputs_json) {
    VerificationReport report;
    report.inputs_json = inputs_json;

    double unit_speed = 0.0;
    for (const SpaceCurve* c : {&surface.alpha, &surface.beta})
        for (const Vec3& t : c->tangent)
            unit_speed = std::max(unit_speed, std::abs(t.norm() - 1.0));
    report.add("unit_speed", unit_speed, tolerances::unit_speed);

    report.add("mean_curvature_max", surface.max_abs_mean_curvature(), h_tolerance);
    report.add("gauss_sign", surface.max_gauss_curvature(), tolerances::gauss_sign);
    report.add("minimality_residual",
               minimality_residual(subsample(surface.alpha, 128),
                                   subsample(surface.beta, 128)),
               1e-6);
    if (surface.degenerate_count() > 0)
        report.flags.push_back(std::to_string(surface.degenerate_count()) +
                               " degenerate node(s) excluded (sin phi < " +
                               std::to_string(surface.sin_phi_min) + ")");
    return report;
}

VerificationReport verify_curve_file(const CurveFile& file) {
    VerificationReport report;
    const SpaceCurve& c = file.curve;

    nlohmann::ordered_json inputs;
    inputs["samples"] = c.size();
    inputs["schema"] = file.has_frames ? "curve" : "sampled";
    report.inputs_json = inputs.dump();

    // Pair the curve with itself: Psi = alpha + alpha. Derivatives run on
    // the full grid; the pair maximum is thinned to at most ~512 nodes.
    const std::size_t stride = std::max<std::size_t>(c.size() / 512, 1);
    report.add("minimality_general",
               minimality_residual_general(c.s_grid, c.position, c.s_grid,
                                           c.position, stride),
               tolerances::minimality_general);

    std::vector<double> kappa = c.kappa, tau = c.tau;
    if (!file.has_frames) {
        const CurvatureTable table = curvature_torsion_from_samples(c.s_grid, c.position);
        kappa = table.kappa;
        tau = table.tau;
    } else {
        double unit_speed = 0.0;
        for (const Vec3& t : c.tangent)
            unit_speed = std::max(unit_speed, std::abs(t.norm() - 1.0));
        report.add("unit_speed", unit_speed, tolerances::unit_speed);
    }

    double tau_max = 0.0;
    for (double t : tau) tau_max = std::max(tau_max, std::abs(t));

    if (tau_max <= 1e-8) {
        // Planar generator: torsion-based invariants do not apply; the
        // curvature must obey (kappa'/kappa)' + kappa^2 = 0 instead.
        report.flags.push_back(
            "planar generator (tau = 0): torsion invariants skipped, planar "
            "curvature law checked");
        const double h = c.s_grid[1] - c.s_grid[0];
        double planar = 0.0;
        for (std::size_t i = 2; i + 2 < c.size(); ++i) {
            const double kp = (kappa[i - 2] - 8.0 * kappa[i - 1] +
                               8.0 * kappa[i + 1] - kappa[i + 2]) /
                              (12.0 * h);
            const double kpp = (-kappa[i - 2] + 16.0 * kappa[i - 1] -
                                30.0 * kappa[i] + 16.0 * kappa[i + 1] -
                                kappa[i + 2]) /
                               (12.0 * h * h);
            const double k = kappa[i];
            planar = std::max(planar,
                              std::abs(kpp / k - (kp / k) * (kp / k) + k * k));
        }
        report.add("planar_ode", planar, tolerances::planar_ode);
        CheckResult skipped;
        skipped.note = "not applicable: tau = 0";
        report.checks["kappa_sq_tau"] = skipped;
        return report;
    }

    const InvariantEstimate est = extract_invariants(c.s_grid, kappa, tau);
    report.add("kappa_sq_tau", est.c1_dev, 1e-6 * std::max(1.0, std::abs(est.c1)),
               "deviation of kappa^2 tau around " + std::to_string(est.c1));
    report.add("sigma_relation", est.c2_dev, 1e-4,
               "deviation of Sigma/tau - tau around " + std::to_string(est.c2));
    report.add("c3_relation", est.c3_dev, 1e-4,
               "deviation of -(Sigma + R^2 + kappa^2) around " +
                   std::to_string(est.c3));

    // Operator spectrum from stencil derivatives at interior samples.
    const double h = c.s_grid[1] - c.s_grid[0];
    double eig_lo[3], eig_hi[3];
    bool first = true;
    const std::size_t estride = std::max<std::size_t>(c.size() / 2048, 1);
    for (std::size_t i = 2; i + 2 < c.size(); i += estride) {
        const double kp =
            (kappa[i - 2] - 8.0 * kappa[i - 1] + 8.0 * kappa[i + 1] - kappa[i + 2]) /
            (12.0 * h);
        const double kpp = (-kappa[i - 2] + 16.0 * kappa[i - 1] - 30.0 * kappa[i] +
                            16.0 * kappa[i + 1] - kappa[i + 2]) /
                           (12.0 * h * h);
        const double tp =
            (tau[i - 2] - 8.0 * tau[i - 1] + 8.0 * tau[i + 1] - tau[i + 2]) /
            (12.0 * h);
        const auto sample = operator_L(kappa[i], kp, kpp, tau[i], tp, c.s_grid[i]);
        for (int k = 0; k < 3; ++k) {
            if (first) {
                eig_lo[k] = eig_hi[k] = sample.eigenvalues[k];
            } else {
                eig_lo[k] = std::min(eig_lo[k], sample.eigenvalues[k]);
                eig_hi[k] = std::max(eig_hi[k], sample.eigenvalues[k]);
            }
        }
        first = false;
    }
    double eigen_range = 0.0;
    if (!first)
        for (int k = 0; k < 3; ++k)
            eigen_range = std::max(eigen_range, eig_hi[k] - eig_lo[k]);
    report.add("eigen_constancy", eigen_range, tolerances::eigen_constancy);
    return report;
}

} // namespace transurf
