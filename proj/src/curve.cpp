#include "transurf/curve.hpp"
#include "transurf/error.hpp"
#include "transurf/rk4.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace transurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Reflection through the xy-plane: flips torsion and the binormal,
/// keeps the frame right-handed. Realizes mirrored moduli (c1 < 0).
void reflect_in_place(SpaceCurve& c) {
    const Vec3 p(1.0, 1.0, -1.0);
    for (auto& v : c.position) v = v.cwiseProduct(p);
    for (auto& v : c.tangent) v = v.cwiseProduct(p);
    for (auto& v : c.normal) v = v.cwiseProduct(p);
    for (auto& v : c.binormal) v = -v.cwiseProduct(p);
    for (auto& t : c.tau) t = -t;
}

Eigen::Matrix3d nearest_orthogonal(const Eigen::Matrix3d& m) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

} // namespace

AmplitudePair amplitude_constants(const Moduli& m) {
    const double r1 = m.lambda1(), r2 = m.lambda2(), r3 = m.lambda3();
    AmplitudePair ab;
    ab.A = std::sqrt(r3 / (r3 - r1));
    ab.B = std::sqrt(r3 / (r3 - r2));
    return ab;
}

double synchronized_phase(const Moduli& m, double kappa0, double kappa_prime0) {
    const auto [y_low, y_high] = equilibria(m);
    const double q = (y_high * y_high - kappa0 * kappa0) /
                     (y_high * y_high - y_low * y_low);
    const double base = std::asin(std::sqrt(std::clamp(q, 0.0, 1.0)));
    // d(kappa^2)/ds = r3 (r1 - r2) d(sin^2 w)/ds with r3 (r1 - r2) <= 0:
    // rising curvature pairs with falling sin^2 w, i.e. the second quadrant.
    return kappa_prime0 >= 0.0 ? kPi - base : base;
}

SpaceCurve construct_generating_curve(const CurvatureProfile& profile) {
    return construct_generating_curve(
        profile, synchronized_phase(profile.moduli, profile.kappa.front(),
                                    profile.kappa_prime.front()));
}

SpaceCurve construct_generating_curve(const CurvatureProfile& profile, double w0) {
    const Moduli& m = profile.moduli;
    if (is_double_root(m))
        throw Error(ErrorCode::DoubleRoot,
                    "double-root moduli generate a circular helix; use circular_helix");
    const AmplitudePair ab = amplitude_constants(m);
    const double A = ab.A, B = ab.B;
    const double r1r2 = m.lambda1() * m.lambda2();

    const std::size_t n = profile.size();
    const double h = profile.step;

    for (std::size_t i = 0; i < n; ++i)
        if (profile.kappa[i] * profile.kappa[i] + r1r2 <= 0.0)
            throw Error(ErrorCode::NonmonotonePhase,
                        "phase derivative not positive; profile is corrupted");

    // State: (y, y', w, x1, x2, x3). The (y, y') block reproduces the
    // profile's own integration; w and the position ride along so that
    // every quantity shares one grid and one order of accuracy.
    const auto rhs = [&](double, const std::array<double, 6>& st) {
        const double y = st[0], w = st[2];
        const double cw = std::cos(w), sw = std::sin(w);
        const double radicand =
            (1.0 - A * A) * cw * cw + (1.0 - B * B) * sw * sw;
        return std::array<double, 6>{st[1],
                                     curvature_rhs(m, y),
                                     std::sqrt(y * y + r1r2),
                                     A * cw,
                                     B * sw,
                                     std::sqrt(radicand)};
    };

    SpaceCurve c;
    c.s_grid = profile.s_grid;
    c.kappa = profile.kappa;
    c.tau = profile.tau;
    c.position.resize(n);
    c.tangent.resize(n);
    c.normal.resize(n);
    c.binormal.resize(n);

    std::array<double, 6> state{profile.kappa.front(), profile.kappa_prime.front(),
                                w0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double w = state[2];
        const double cw = std::cos(w), sw = std::sin(w);
        const double radicand =
            (1.0 - A * A) * cw * cw + (1.0 - B * B) * sw * sw;
        if (!(radicand > 0.0))
            throw Error(ErrorCode::NonmonotonePhase,
                        "third tangent component lost positivity");
        const double a3 = std::sqrt(radicand);
        const double wp = std::sqrt(state[0] * state[0] + r1r2);

        c.position[i] = Vec3(state[3], state[4], state[5]);
        c.tangent[i] = Vec3(A * cw, B * sw, a3);
        // alpha'' = w' (-A sin w, B cos w, (A^2 - B^2) cos w sin w / a3);
        // its norm equals kappa up to the conservation error.
        Vec3 second(-A * sw * wp, B * cw * wp, (A * A - B * B) * cw * sw / a3 * wp);
        c.normal[i] = second.normalized();
        c.binormal[i] = c.tangent[i].cross(c.normal[i]);

        if (i + 1 < n) state = rk4_step(rhs, c.s_grid[i], h, state);
    }

    if (m.mirrored) reflect_in_place(c);
    return c;
}

SpaceCurve frenet_reconstruct(const std::function<double(double)>& kappa,
                              const std::function<double(double)>& tau,
                              std::pair<double, double> s_span, double h) {
    const auto [s0, s1] = s_span;
    const std::size_t n = static_cast<std::size_t>(std::llround((s1 - s0) / h));

    // State rows: t, n, b, then position.
    const auto rhs = [&](double s, const std::array<double, 12>& st) {
        const double k = kappa(s);
        if (!(k > 0.0))
            throw Error(ErrorCode::NonpositiveKappa,
                        "Frenet system needs kappa > 0 on the span");
        const double t = tau(s);
        std::array<double, 12> d;
        for (int i = 0; i < 3; ++i) {
            d[i] = k * st[3 + i];
            d[3 + i] = -k * st[i] + t * st[6 + i];
            d[6 + i] = -t * st[3 + i];
            d[9 + i] = st[i];
        }
        return d;
    };

    SpaceCurve c;
    std::array<double, 12> state{1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0};
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = s0 + static_cast<double>(i) * h;
        c.s_grid.push_back(s);
        c.tangent.emplace_back(state[0], state[1], state[2]);
        c.normal.emplace_back(state[3], state[4], state[5]);
        c.binormal.emplace_back(state[6], state[7], state[8]);
        c.position.emplace_back(state[9], state[10], state[11]);
        c.kappa.push_back(kappa(s));
        c.tau.push_back(tau(s));
        if (i == n) break;

        state = rk4_step(rhs, s, h, state);
        Eigen::Matrix3d frame;
        frame << state[0], state[1], state[2],
                 state[3], state[4], state[5],
                 state[6], state[7], state[8];
        frame = nearest_orthogonal(frame);
        for (int r = 0; r < 3; ++r)
            for (int col = 0; col < 3; ++col) state[3 * r + col] = frame(r, col);
    }
    return c;
}

SpaceCurve circular_helix(double a, double b, std::pair<double, double> s_span,
                          double h) {
    if (!(a > 0.0) || b == 0.0)
        throw Error(ErrorCode::BadRadius, "need a > 0 and b != 0");
    const double r2 = a * a + b * b;
    const double r = std::sqrt(r2);
    const auto [s0, s1] = s_span;
    const std::size_t n = static_cast<std::size_t>(std::llround((s1 - s0) / h));

    SpaceCurve c;
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = s0 + static_cast<double>(i) * h;
        const double phi = s / r;
        const double cp = std::cos(phi), sp = std::sin(phi);
        c.s_grid.push_back(s);
        c.position.emplace_back(a * cp, a * sp, b * phi);
        c.tangent.emplace_back(-a * sp / r, a * cp / r, b / r);
        c.normal.emplace_back(-cp, -sp, 0.0);
        c.binormal.emplace_back(b * sp / r, -b * cp / r, a / r);
        c.kappa.push_back(a / r2);
        c.tau.push_back(b / r2);
    }
    return c;
}

SpaceCurve straight_line(const Vec3& direction, std::pair<double, double> s_span,
                         double h) {
    const double norm = direction.norm();
    if (!(norm > 0.0))
        throw Error(ErrorCode::ParallelDirections, "zero direction vector");
    const Vec3 t = direction / norm;
    // Complete an arbitrary constant frame.
    Vec3 helper = std::abs(t.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    const Vec3 nvec = (helper - helper.dot(t) * t).normalized();
    const Vec3 bvec = t.cross(nvec);

    const auto [s0, s1] = s_span;
    const std::size_t n = static_cast<std::size_t>(std::llround((s1 - s0) / h));
    SpaceCurve c;
    for (std::size_t i = 0; i <= n; ++i) {
        const double s = s0 + static_cast<double>(i) * h;
        c.s_grid.push_back(s);
        c.position.push_back(s * t);
        c.tangent.push_back(t);
        c.normal.push_back(nvec);
        c.binormal.push_back(bvec);
        c.kappa.push_back(0.0);
        c.tau.push_back(0.0);
    }
    return c;
}

namespace {

/// Cumulative arc length of the Scherk generator on [u_lo, u_hi],
/// anchored so s(anchor) = 0, with per-interval Simpson quadrature of
/// the analytic speed and Newton inversion for u(s).
class ScherkArcLength {
public:
    ScherkArcLength(double c, double u_lo, double u_hi, double anchor,
                    std::size_t n_fine)
        : c_(c) {
        // Two uniform segments meeting exactly at the anchor.
        build_segment(u_lo, anchor, n_fine);
        build_segment(anchor, u_hi, n_fine);
    }

    double speed(double u) const { return 1.0 / std::cos(c_ * u); }

    double s_of(double u) const {
        const auto it =
            std::upper_bound(u_nodes_.begin(), u_nodes_.end(), u);
        std::size_t j = static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(it - u_nodes_.begin() - 1, 0,
                                       static_cast<std::ptrdiff_t>(u_nodes_.size()) - 1));
        return s_nodes_[j] + gauss5(u_nodes_[j], u);
    }

    double u_of(double s) const {
        const auto it = std::lower_bound(s_nodes_.begin(), s_nodes_.end(), s);
        std::size_t j = static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(it - s_nodes_.begin() - 1, 0,
                                       static_cast<std::ptrdiff_t>(s_nodes_.size()) - 2));
        // Linear seed, then Newton on s_of(u) - s with exact derivative.
        double u = u_nodes_[j] +
                   (s - s_nodes_[j]) / (s_nodes_[j + 1] - s_nodes_[j]) *
                       (u_nodes_[j + 1] - u_nodes_[j]);
        for (int it2 = 0; it2 < 8; ++it2) {
            const double f = s_of(u) - s;
            const double du = f * std::cos(c_ * u);
            u -= du;
            if (std::abs(du) < 1e-15 * std::max(1.0, std::abs(u))) break;
        }
        return u;
    }

    double s_min() const { return s_nodes_.front(); }
    double s_max() const { return s_nodes_.back(); }

private:
    void build_segment(double a, double b, std::size_t n_fine) {
        if (u_nodes_.empty()) {
            u_nodes_.push_back(a);
            s_nodes_.push_back(0.0);
        }
        if (!(b > a)) return;
        const std::size_t base = u_nodes_.size() - 1;
        const double du = (b - a) / static_cast<double>(n_fine);
        for (std::size_t i = 1; i <= n_fine; ++i) {
            const double lo = a + static_cast<double>(i - 1) * du;
            const double hi = a + static_cast<double>(i) * du;
            const double mid = 0.5 * (lo + hi);
            const double inc =
                (hi - lo) / 6.0 * (speed(lo) + 4.0 * speed(mid) + speed(hi));
            u_nodes_.push_back(i == n_fine ? b : hi);
            s_nodes_.push_back(s_nodes_[base + i - 1] + inc);
        }
    }

public:
    /// Shift the table so that s = 0 falls at the anchor parameter.
    void anchor_shift(double s_at_anchor) {
        for (double& s : s_nodes_) s -= s_at_anchor;
    }

private:
    double c_;
    std::vector<double> u_nodes_;
    std::vector<double> s_nodes_;

    double gauss5(double a, double b) const {
        // 5-point Gauss-Legendre on [a, b].
        static const double xs[5] = {-0.9061798459386640, -0.5384693101056831,
                                     0.0, 0.5384693101056831, 0.9061798459386640};
        static const double ws[5] = {0.2369268850561891, 0.4786286704993665,
                                     0.5688888888888889, 0.4786286704993665,
                                     0.2369268850561891};
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double sum = 0.0;
        for (int i = 0; i < 5; ++i) sum += ws[i] * speed(mid + half * xs[i]);
        return sum * half;
    }
};

} // namespace

SpaceCurve scherk_generator(double c, double dir_angle, double z_sign,
                            std::pair<double, double> u_span,
                            std::size_t n_samples) {
    if (!(c > 0.0))
        throw Error(ErrorCode::SpanHitsSingularity, "scale c must be positive");
    const double limit = kPi / (2.0 * c);
    const auto [u_lo, u_hi] = u_span;
    if (!(u_lo < u_hi) || u_lo <= -limit || u_hi >= limit)
        throw Error(ErrorCode::SpanHitsSingularity,
                    "u span must lie strictly inside (-pi/2c, pi/2c)");
    if (n_samples < 2)
        throw Error(ErrorCode::GridTooCoarse, "need at least 2 samples");

    const double anchor = std::clamp(0.0, u_lo, u_hi);
    const std::size_t n_fine = std::max<std::size_t>(4 * n_samples, 4096);
    ScherkArcLength map(c, u_lo, u_hi, anchor, n_fine);
    // The constructor accumulates from u_lo with s(u_lo) = 0; shift so
    // that s(anchor) = 0.
    map.anchor_shift(map.s_of(anchor));

    const double s_lo = map.s_min(), s_hi = map.s_max();
    const double ds = (s_hi - s_lo) / static_cast<double>(n_samples - 1);
    const double cd = std::cos(dir_angle), sd = std::sin(dir_angle);

    SpaceCurve out;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double s = (i + 1 == n_samples) ? s_hi
                                              : s_lo + static_cast<double>(i) * ds;
        const double u = map.u_of(s);
        const double cu = std::cos(c * u), su = std::sin(c * u);
        out.s_grid.push_back(s);
        out.position.emplace_back(u * cd, u * sd,
                                  z_sign / c * std::log(cu));
        out.tangent.emplace_back(cd * cu, sd * cu, -z_sign * su);
        out.normal.emplace_back(-cd * su, -sd * su, -z_sign * cu);
        out.binormal.emplace_back(z_sign * -sd, z_sign * cd, 0.0);
        out.kappa.push_back(c * cu);
        out.tau.push_back(0.0);
    }
    return out;
}

SpaceCurve scherk_curve(double c, std::pair<double, double> u_span,
                        std::size_t n_samples) {
    return scherk_generator(c, 0.0, -1.0, u_span, n_samples);
}

namespace {

struct Stencil5 {
    double d1, d2, d3;
};

Stencil5 central(const std::vector<double>& f, std::size_t i, double h) {
    const double fm2 = f[i - 2], fm1 = f[i - 1], f0 = f[i], fp1 = f[i + 1],
                 fp2 = f[i + 2];
    return {(fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h),
            (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h),
            (-fm2 + 2.0 * fm1 - 2.0 * fp1 + fp2) / (2.0 * h * h * h)};
}

Stencil5 one_sided(const std::vector<double>& f, std::size_t i, double h,
                   bool forward) {
    const int dir = forward ? 1 : -1;
    const double f0 = f[i], f1 = f[i + dir], f2 = f[i + 2 * dir],
                 f3 = f[i + 3 * dir], f4 = f[i + 4 * dir];
    const double sgn = forward ? 1.0 : -1.0;
    return {sgn * (-25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4) /
                (12.0 * h),
            (35.0 * f0 - 104.0 * f1 + 114.0 * f2 - 56.0 * f3 + 11.0 * f4) /
                (12.0 * h * h),
            sgn * (-5.0 * f0 + 18.0 * f1 - 24.0 * f2 + 14.0 * f3 - 3.0 * f4) /
                (2.0 * h * h * h)};
}

} // namespace

CurvatureTable curvature_torsion_from_samples(const std::vector<double>& s_grid,
                                              const std::vector<Vec3>& position) {
    const std::size_t n = s_grid.size();
    if (n < 7 || position.size() != n)
        throw Error(ErrorCode::GridTooCoarse, "need at least 7 uniform samples");
    const double h = s_grid[1] - s_grid[0];
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs((s_grid[i] - s_grid[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw Error(ErrorCode::GridTooCoarse, "grid is not uniform");

    std::vector<double> comp[3];
    for (int k = 0; k < 3; ++k) {
        comp[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) comp[k][i] = position[i][k];
    }

    CurvatureTable table;
    table.s_grid = s_grid;
    table.kappa.resize(n);
    table.tau.resize(n);
    table.low_accuracy.assign(n, false);

    for (std::size_t i = 0; i < n; ++i) {
        Vec3 d1, d2, d3;
        const bool interior = i >= 2 && i + 2 < n;
        for (int k = 0; k < 3; ++k) {
            const Stencil5 st = interior
                                    ? central(comp[k], i, h)
                                    : one_sided(comp[k], i, h, i < 2);
            d1[k] = st.d1;
            d2[k] = st.d2;
            d3[k] = st.d3;
        }
        table.low_accuracy[i] = !interior;
        const Vec3 cr = d1.cross(d2);
        const double cr2 = cr.squaredNorm();
        if (cr2 < 1e-24)
            throw Error(ErrorCode::DegenerateSecondDerivative,
                        "|a' x a''| below 1e-12; curvature undefined");
        const double speed = d1.norm();
        table.kappa[i] = std::sqrt(cr2) / (speed * speed * speed);
        table.tau[i] = cr.dot(d3) / cr2;
    }
    return table;
}

CurvatureTable curvature_torsion_from_samples(const SpaceCurve& curve) {
    return curvature_torsion_from_samples(curve.s_grid, curve.position);
}

SpaceCurve aligned_to(const SpaceCurve& reference, const SpaceCurve& curve) {
    Eigen::Matrix3d ref_frame, cur_frame;
    ref_frame.col(0) = reference.tangent.front();
    ref_frame.col(1) = reference.normal.front();
    ref_frame.col(2) = reference.binormal.front();
    cur_frame.col(0) = curve.tangent.front();
    cur_frame.col(1) = curve.normal.front();
    cur_frame.col(2) = curve.binormal.front();
    const Eigen::Matrix3d rot = ref_frame * cur_frame.transpose();
    const Vec3 base = curve.position.front();
    const Vec3 target = reference.position.front();

    SpaceCurve out = curve;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        out.position[i] = rot * (curve.position[i] - base) + target;
        out.tangent[i] = rot * curve.tangent[i];
        out.normal[i] = rot * curve.normal[i];
        out.binormal[i] = rot * curve.binormal[i];
    }
    return out;
}

double max_position_distance(const SpaceCurve& a, const SpaceCurve& b,
                             std::size_t n) {
    std::size_t count = std::min(a.size(), b.size());
    if (n > 0) count = std::min(count, n);
    double dmax = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        dmax = std::max(dmax, (a.position[i] - b.position[i]).norm());
    return dmax;
}

} // namespace transurf
