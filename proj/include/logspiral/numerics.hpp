#pragma once

#include "logspiral/vec3.hpp"

#include <cmath>
#include <functional>
#include <limits>

// Finite-difference and quadrature helpers shared by the geometry modules.
namespace logspiral::numerics {

inline constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

[[nodiscard]] inline double magnitude(double x) noexcept { return std::abs(x); }
[[nodiscard]] inline double magnitude(const Vec3& v) noexcept { return norm(v); }

/// cbrt(eps) * max(1, |x|): balances O(h^2) truncation against eps/h round-off.
[[nodiscard]] inline double first_derivative_step(double x) noexcept
{
    return std::cbrt(kEpsilon) * std::max(1.0, std::abs(x));
}

/// eps^(1/4) * max(1, |x|), the matching choice for second differences.
[[nodiscard]] inline double second_derivative_step(double x) noexcept
{
    return std::sqrt(std::sqrt(kEpsilon)) * std::max(1.0, std::abs(x));
}

/// Combines O(h^2) estimates taken at h and h/2 into an O(h^4) one.
template <typename T>
[[nodiscard]] T richardson(const T& coarse, const T& fine)
{
    return (4.0 * fine - coarse) / 3.0;
}

template <typename T, typename F>
[[nodiscard]] T central_first(const F& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <typename T, typename F>
[[nodiscard]] T central_second(const F& f, double x, double h, const T& fx)
{
    return (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
}

template <typename T>
struct Estimate {
    T value{};
    double error = 0.0; ///< magnitude of the difference between two extrapolation levels
};

/// First derivative by central differences at h, h/2, h/4 with one Richardson level.
template <typename T, typename F>
[[nodiscard]] Estimate<T> richardson_first(const F& f, double x, double h)
{
    const T d0 = central_first<T>(f, x, h);
    const T d1 = central_first<T>(f, x, h / 2.0);
    const T d2 = central_first<T>(f, x, h / 4.0);
    const T coarse = richardson(d0, d1);
    const T fine = richardson(d1, d2);
    return {fine, magnitude(fine - coarse)};
}

template <typename T, typename F>
[[nodiscard]] Estimate<T> richardson_second(const F& f, double x, double h, const T& fx)
{
    const T d0 = central_second<T>(f, x, h, fx);
    const T d1 = central_second<T>(f, x, h / 2.0, fx);
    const T d2 = central_second<T>(f, x, h / 4.0, fx);
    const T coarse = richardson(d0, d1);
    const T fine = richardson(d1, d2);
    return {fine, magnitude(fine - coarse)};
}

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]; b < a integrates backwards.
[[nodiscard]] double integrate(const std::function<double(double)>& f, double a, double b,
                               double rel_tol = 1e-10);

} // namespace logspiral::numerics
