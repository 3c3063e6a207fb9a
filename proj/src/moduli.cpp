#include "transurf/moduli.hpp"
#include "transurf/error.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace transurf {

double Moduli::characteristic(double x) const {
    return -x * x * x + c2 * x * x - c3 * x + c1;
}

double cubic_discriminant(double c1, double c2, double c3) {
    // Standard discriminant of x^3 - c2 x^2 + c3 x - c1 (the monic form of
    // the characteristic cubic). Note the -27 c1^2 tail.
    return 18.0 * c1 * c2 * c3 - 4.0 * c1 * c2 * c2 * c2 + c2 * c2 * c3 * c3
         - 4.0 * c3 * c3 * c3 - 27.0 * c1 * c1;
}

namespace {

struct VietaResult {
    double c1, c2, c3;
};

VietaResult vieta(double r1, double r2, double r3) {
    return {r1 * r2 * r3, r1 + r2 + r3, r1 * r2 + r1 * r3 + r2 * r3};
}

Moduli canonicalize(std::array<double, 3> roots) {
    std::sort(roots.begin(), roots.end());
    const double product = roots[0] * roots[1] * roots[2];
    bool mirrored = false;
    if (product < 0.0) {
        // Two positive roots, one negative: negate and re-sort so that the
        // stored triple satisfies r1 <= r2 < 0 < r3.
        for (double& r : roots) r = -r;
        std::sort(roots.begin(), roots.end());
        mirrored = true;
    }
    if (!(roots[1] < 0.0 && roots[2] > 0.0))
        throw Error(ErrorCode::SameSign, "roots must not share one sign");
    const auto [c1, c2, c3] = vieta(roots[0], roots[1], roots[2]);
    Moduli m;
    m.c1 = c1;
    m.c2 = c2;
    m.c3 = c3;
    m.roots = roots;
    m.mirrored = mirrored;
    return m;
}

double newton_polish(double c1, double c2, double c3, double x) {
    // Monic form p(x) = x^3 - c2 x^2 + c3 x - c1.
    for (int it = 0; it < 4; ++it) {
        const double p = ((x - c2) * x + c3) * x - c1;
        const double dp = (3.0 * x - 2.0 * c2) * x + c3;
        if (dp == 0.0) break;
        const double step = p / dp;
        // Near a multiple root Newton stalls; the trig solution is already
        // accurate there.
        if (!std::isfinite(step) || std::abs(step) > 1.0) break;
        x -= step;
        if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

} // namespace

Moduli coefficients_from_roots(double r1, double r2, double r3) {
    for (double r : {r1, r2, r3})
        if (r == 0.0)
            throw Error(ErrorCode::ZeroRoot, "a vanishing root forces c1 = 0");
    if ((r1 > 0) == (r2 > 0) && (r2 > 0) == (r3 > 0))
        throw Error(ErrorCode::SameSign, "roots must have mixed signs");
    return canonicalize({r1, r2, r3});
}

Moduli roots_from_coefficients(double c1, double c2, double c3) {
    if (c1 == 0.0)
        throw Error(ErrorCode::ZeroC1, "c1 must be non-zero");
    bool mirrored = false;
    if (c1 < 0.0) {
        // Mirror rule: solve the negated-root cubic, flag the reflection.
        c1 = -c1;
        c2 = -c2;
        mirrored = true;
    }

    const double disc = cubic_discriminant(c1, c2, c3);
    if (disc < 0.0)
        throw Error(ErrorCode::ComplexRoots, "cubic discriminant is negative");

    // Depressed form of x^3 - c2 x^2 + c3 x - c1 via x = u + c2/3.
    const double shift = c2 / 3.0;
    const double p = c3 - c2 * c2 / 3.0;
    const double q = -2.0 * c2 * c2 * c2 / 27.0 + c2 * c3 / 3.0 - c1;

    std::array<double, 3> roots;
    if (p >= 0.0) {
        // disc >= 0 with p >= 0 only happens at a triple root (p = q = 0).
        roots = {shift, shift, shift};
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        constexpr double two_pi_3 = 2.0943951023931953;
        for (int k = 0; k < 3; ++k)
            roots[k] = m * std::cos(theta - two_pi_3 * k) + shift;
        for (double& r : roots) r = newton_polish(c1, c2, c3, r);
    }

    if (roots[0] * roots[1] * roots[2] == 0.0)
        throw Error(ErrorCode::ZeroRoot, "cubic has a zero root");
    if ((roots[0] > 0) == (roots[1] > 0) && (roots[1] > 0) == (roots[2] > 0))
        throw Error(ErrorCode::SameSign, "cubic roots share one sign");

    Moduli m = canonicalize(roots);
    m.mirrored = mirrored;
    return m;
}

bool is_double_root(const Moduli& m, double tol) {
    return std::abs(m.roots[0] - m.roots[1]) <= tol * std::max(1.0, std::abs(m.roots[0]));
}

std::string to_json(const Moduli& m) {
    nlohmann::json j;
    j["c1"] = m.c1;
    j["c2"] = m.c2;
    j["c3"] = m.c3;
    j["roots"] = {m.roots[0], m.roots[1], m.roots[2]};
    j["mirrored"] = m.mirrored;
    return j.dump();
}

Moduli moduli_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    try {
        Moduli m;
        const auto& roots = j.at("roots");
        if (roots.size() != 3)
            throw Error(ErrorCode::ParseError, "\"roots\" must hold three numbers");
        m = coefficients_from_roots(roots[0].get<double>(), roots[1].get<double>(),
                                    roots[2].get<double>());
        m.mirrored = j.value("mirrored", false);
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

} // namespace transurf
