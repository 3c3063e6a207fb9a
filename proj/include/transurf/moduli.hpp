#pragma once

#include <array>
#include <string>

namespace transurf {

/// The constant triple (c1, c2, c3) of a non-planar minimal translation
/// surface together with the real roots of the characteristic cubic
///   -x^3 + c2 x^2 - c3 x + c1 = 0.
///
/// Storage is canonical: roots sorted so that r1 <= r2 < 0 < r3 (which
/// forces c1 > 0). A parameter set with two positive and one negative
/// root (c1 < 0) is stored negated with `mirrored` set; consumers apply
/// the corresponding reflection when emitting geometry.
struct Moduli {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    std::array<double, 3> roots{0.0, 0.0, 0.0};
    bool mirrored = false;

    double lambda1() const { return roots[0]; }
    double lambda2() const { return roots[1]; }
    double lambda3() const { return roots[2]; }

    /// Characteristic polynomial -x^3 + c2 x^2 - c3 x + c1 at x.
    double characteristic(double x) const;
};

/// Discriminant of the cubic -x^3 + c2 x^2 - c3 x + c1; non-negative
/// exactly when all three roots are real. Equals prod_{i<j} (ri - rj)^2.
double cubic_discriminant(double c1, double c2, double c3);

/// Build Moduli from three roots via Vieta's formulas.
/// Throws ZeroRoot if any root vanishes, SameSign if the roots do not
/// have mixed signs.
Moduli coefficients_from_roots(double r1, double r2, double r3);

/// Build Moduli from coefficients by solving the cubic (trigonometric
/// method, Newton-polished). Throws ZeroC1, ComplexRoots, SameSign.
Moduli roots_from_coefficients(double c1, double c2, double c3);

/// True iff r1 and r2 coincide within tol*max(1,|r1|). Double-root
/// moduli admit only the constant curvature solution and must be routed
/// to the circular-helix constructor.
bool is_double_root(const Moduli& m, double tol = 1e-9);

/// JSON object {"c1":..,"c2":..,"c3":..,"roots":[..],"mirrored":..}.
std::string to_json(const Moduli& m);
Moduli moduli_from_json(const std::string& text);

} // namespace transurf
