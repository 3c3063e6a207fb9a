#pragma once

#include <array>
#include <cstddef>

namespace transurf {

/// One classical Runge-Kutta step of fixed size h for an autonomous or
/// time-dependent system. Rhs has signature state = f(s, state).
template <std::size_t N, typename Rhs>
std::array<double, N> rk4_step(const Rhs& rhs, double s, double h,
                               const std::array<double, N>& state) {
    const auto k1 = rhs(s, state);
    std::array<double, N> tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = state[i] + 0.5 * h * k1[i];
    const auto k2 = rhs(s + 0.5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = state[i] + 0.5 * h * k2[i];
    const auto k3 = rhs(s + 0.5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i) tmp[i] = state[i] + h * k3[i];
    const auto k4 = rhs(s + h, tmp);
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = state[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

} // namespace transurf
