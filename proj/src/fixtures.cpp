#include "transurf/fixtures.hpp"
#include "transurf/error.hpp"

#include <cmath>

namespace transurf {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TranslationSurface scherk_surface(const ScherkParams& params, std::size_t grid_n,
                                  std::pair<double, double> u_span,
                                  std::pair<double, double> v_span) {
    if (!(params.c > 0.0))
        throw Error(ErrorCode::GridHitsSingularity, "scale c must be positive");
    const double limit = kPi / (2.0 * params.c);
    const double padded = 0.95 * limit;
    if (u_span.first == 0.0 && u_span.second == 0.0) u_span = {-padded, padded};
    if (v_span.first == 0.0 && v_span.second == 0.0) v_span = {-padded, padded};
    for (const auto& span : {u_span, v_span})
        if (!(span.first < span.second) || span.first <= -limit ||
            span.second >= limit)
            throw Error(ErrorCode::GridHitsSingularity,
                        "grid must lie strictly inside (-pi/2c, pi/2c)^2");

    SpaceCurve alpha, beta;
    try {
        alpha = scherk_generator(params.c, 0.0, -1.0, u_span, grid_n);
        beta = scherk_generator(params.c, params.theta, +1.0, v_span, grid_n);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SpanHitsSingularity)
            throw Error(ErrorCode::GridHitsSingularity, e.what());
        throw;
    }
    return surface_from_curves(alpha, beta);
}

TranslationSurface helicoid_surface(std::size_t grid_n,
                                    std::pair<double, double> s_span,
                                    std::pair<double, double> t_span) {
    const double hs = (s_span.second - s_span.first) / static_cast<double>(grid_n - 1);
    const double ht = (t_span.second - t_span.first) / static_cast<double>(grid_n - 1);
    const SpaceCurve alpha = circular_helix(0.5, 0.5, s_span, hs);
    const SpaceCurve beta = circular_helix(0.5, 0.5, t_span, ht);
    return surface_from_curves(alpha, beta);
}

TranslationSurface plane_surface(const Vec3& u_dir, const Vec3& v_dir,
                                 std::size_t grid_n,
                                 std::pair<double, double> u_span,
                                 std::pair<double, double> v_span) {
    if (u_dir.cross(v_dir).norm() <= 1e-12 * u_dir.norm() * v_dir.norm())
        throw Error(ErrorCode::ParallelDirections,
                    "generating directions must be linearly independent");
    const double hu = (u_span.second - u_span.first) / static_cast<double>(grid_n - 1);
    const double hv = (v_span.second - v_span.first) / static_cast<double>(grid_n - 1);
    return surface_from_curves(straight_line(u_dir, u_span, hu),
                               straight_line(v_dir, v_span, hv));
}

} // namespace transurf
