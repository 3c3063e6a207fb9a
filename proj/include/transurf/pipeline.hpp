#pragma once

#include "transurf/csv.hpp"
#include "transurf/curvature_ode.hpp"
#include "transurf/curve.hpp"
#include "transurf/moduli.hpp"
#include "transurf/report.hpp"
#include "transurf/surface.hpp"

#include <optional>
#include <utility>

namespace transurf {

struct ConstructOptions {
    Moduli moduli;
    double y0 = 0.0;
    std::pair<double, double> span{0.0, 20.0};
    double step = 1e-3;
    std::size_t grid_n = 101;
    std::optional<double> w0; // raw phase override; default: synchronized
};

struct ConstructResult {
    Moduli moduli;
    CurvatureProfile profile;
    SpaceCurve curve;
    TranslationSurface surface;
    VerificationReport report;
    bool helix_path = false; // double-root moduli routed to circular_helix
};

/// Scheme end to end: moduli -> equilibria -> initial value -> curvature
/// ODE with phase and position -> generating curve -> Psi(s,t) =
/// alpha(s) + alpha(t) on a grid_n x grid_n subsample -> verification
/// report. Double-root moduli take the helix path (y0 is then ignored).
ConstructResult run_construction(const ConstructOptions& options);

/// Verification of an ingested curve file: arbitrary-parameterization
/// minimality of Psi = curve + curve, invariant extraction, operator
/// spectrum constancy. Planar curves (tau = 0) are routed to the planar
/// curvature law instead of the torsion-based checks.
VerificationReport verify_curve_file(const CurveFile& file);

/// Report for a closed-form fixture surface: unit speed of both
/// generators, max |H| against h_tolerance, Gauss sign, and the
/// unit-speed minimality residual.
VerificationReport fixture_report(const TranslationSurface& surface,
                                  double h_tolerance,
                                  const std::string& inputs_json);

} // namespace transurf
