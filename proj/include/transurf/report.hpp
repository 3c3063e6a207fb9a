#pragma once

#include <map>
#include <string>
#include <vector>

namespace transurf {

/// One named residual with its tolerance. `pass` is max <= tolerance.
struct CheckResult {
    double max = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::string note;
};

/// Verification summary written as JSON (schema 1). Tolerances are
/// stored per entry so archived reports stay meaningful if the defaults
/// move. Exported without the timestamp when with_timestamp is false,
/// which makes byte-identical golden files possible.
struct VerificationReport {
    int schema = 1;
    std::string tool = "transurf";
    std::string version;
    std::string timestamp;
    std::string inputs_json = "{}";
    std::map<std::string, CheckResult> checks;
    std::vector<std::string> flags;

    void add(const std::string& name, double max, double tolerance,
             const std::string& note = "");
    bool pass() const;
    std::string to_json(bool with_timestamp = true) const;
};

/// Multiplier applied to every tolerance, from TRANSURF_TOL_SCALE
/// (default 1; intended for CI on noisy hardware).
double tolerance_scale();

/// Default tolerances for the construction pipeline checks.
namespace tolerances {
inline constexpr double unit_speed = 1e-9;
inline constexpr double kappa_sq_tau_rel = 1e-8;
inline constexpr double sigma_relation = 1e-5;
inline constexpr double c3_relation = 1e-5;
inline constexpr double first_integral = 1e-7;
inline constexpr double eigen_constancy = 1e-6;
inline constexpr double mean_curvature_max = 1e-5;
inline constexpr double gauss_sign = 1e-8;
inline constexpr double band_confinement = 1e-6;
inline constexpr double planar_ode = 1e-6;
inline constexpr double minimality_general = 1e-5;
} // namespace tolerances

} // namespace transurf
