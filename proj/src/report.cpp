#include "transurf/report.hpp"
#include "transurf/version.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>

namespace transurf {

double tolerance_scale() {
    const char* env = std::getenv("TRANSURF_TOL_SCALE");
    if (!env) return 1.0;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !(v > 0.0)) return 1.0;
    return v;
}

void VerificationReport::add(const std::string& name, double max,
                             double tolerance, const std::string& note) {
    CheckResult r;
    r.max = max;
    r.tolerance = tolerance * tolerance_scale();
    r.pass = max <= r.tolerance;
    r.note = note;
    checks[name] = r;
}

bool VerificationReport::pass() const {
    for (const auto& [name, check] : checks)
        if (!check.pass) return false;
    return true;
}

std::string VerificationReport::to_json(bool with_timestamp) const {
    nlohmann::ordered_json j;
    j["schema"] = schema;
    j["tool"] = tool;
    j["version"] = version.empty() ? std::string(kVersion) : version;
    if (with_timestamp && !timestamp.empty()) j["timestamp"] = timestamp;
    j["inputs"] = nlohmann::ordered_json::parse(inputs_json);
    nlohmann::ordered_json jc;
    for (const auto& [name, check] : checks) {
        nlohmann::ordered_json e;
        e["max"] = check.max;
        e["tolerance"] = check.tolerance;
        e["pass"] = check.pass;
        if (!check.note.empty()) e["note"] = check.note;
        jc[name] = e;
    }
    j["checks"] = jc;
    if (!flags.empty()) j["flags"] = flags;
    j["pass"] = pass();
    return j.dump(2) + "\n";
}

} // namespace transurf
