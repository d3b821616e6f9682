#include "logspiral/closed_form.hpp"

#include "logspiral/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace logspiral {

namespace {

// x cot x = sum c_n x^(2n); the same series in z = K r^2 gives x coth x for K < 0.
constexpr std::array<double, 6> kCotSeries = {
    1.0, -1.0 / 3.0, -1.0 / 45.0, -2.0 / 945.0, -1.0 / 4725.0, -2.0 / 93555.0,
};

std::string format_query(double K, double r, double theta)
{
    std::ostringstream os;
    os.precision(17);
    os << "K = " << K << ", r = " << r << ", theta = " << theta;
    return os.str();
}

void check_radius(double r)
{
    if (!(r > 0.0) || !std::isfinite(r))
        raise(ErrorKind::DomainError, "r must be positive and finite");
}

double f_prime_series(double t, double r)
{
    const double z = t * r * r;
    // d/dt of (1/r) sum c_n (t r^2)^n = r sum n c_n z^(n-1); leading term kept separate
    // so that z = 0 returns exactly -r/3.
    const double tail =
        2.0 * kCotSeries[2] +
        z * (3.0 * kCotSeries[3] + z * (4.0 * kCotSeries[4] + z * (5.0 * kCotSeries[5])));
    return -r / 3.0 + r * z * tail;
}

} // namespace

std::string_view to_string(EvaluationMethod method) noexcept
{
    switch (method) {
    case EvaluationMethod::closed_form: return "closed_form";
    case EvaluationMethod::numeric: return "numeric";
    case EvaluationMethod::series: return "series";
    }
    return "unknown";
}

EvaluationMethod evaluation_method(double K, double r) noexcept
{
    return std::abs(K) * r * r < kSeamThreshold ? EvaluationMethod::series
                                                 : EvaluationMethod::closed_form;
}

double characteristic_cosine(double theta) noexcept
{
    return std::sin(std::numbers::pi / 2 - theta);
}

void check_admissible(const SpiralCurvatureQuery& q)
{
    if (!std::isfinite(q.K))
        raise(ErrorKind::DomainError, "K must be finite");
    if (!(q.r > 0.0) || !std::isfinite(q.r))
        raise(ErrorKind::DomainError, "r must be positive (" + format_query(q.K, q.r, q.theta) + ")");
    if (!(q.theta > 0.0 && q.theta < std::numbers::pi))
        raise(ErrorKind::DomainError,
              "theta must lie in (0, pi) (" + format_query(q.K, q.r, q.theta) + ")");
    if (q.K > 0.0 && !(q.r * std::sqrt(q.K) < std::numbers::pi))
        raise(ErrorKind::DomainError,
              "r must be below pi/sqrt(K) for K > 0 (" + format_query(q.K, q.r, q.theta) + ")");
}

double f_series(double t, double r, int terms)
{
    const double z = t * r * r;
    double sum = 0.0;
    for (int n = terms - 1; n >= 0; --n)
        sum = sum * z + kCotSeries[static_cast<std::size_t>(n)];
    return sum / r;
}

double f_direct(double t, double r)
{
    check_radius(r);
    if (t > 0.0) {
        const double s = std::sqrt(t);
        const double a = r * s;
        if (std::abs(std::remainder(a, std::numbers::pi)) <= 1e-12 * a)
            raise(ErrorKind::DomainError, "f has a pole at r sqrt(t) in pi Z");
        return s * std::cos(a) / std::sin(a);
    }
    if (t < 0.0) {
        const double s = std::sqrt(-t);
        return s / std::tanh(r * s);
    }
    return 1.0 / r;
}

double f(double t, double r)
{
    check_radius(r);
    if (!std::isfinite(t))
        raise(ErrorKind::DomainError, "t must be finite");
    if (t == 0.0)
        return 1.0 / r;
    if (std::abs(t) * r * r < kSeamThreshold)
        return f_series(t, r, 4);
    return f_direct(t, r);
}

double f_prime(double t, double r)
{
    check_radius(r);
    if (!std::isfinite(t))
        raise(ErrorKind::DomainError, "t must be finite");
    if (std::abs(t) * r * r < kSeamThreshold)
        return f_prime_series(t, r);
    if (t > 0.0) {
        const double s = std::sqrt(t);
        const double a = r * s;
        if (!(a < std::numbers::pi))
            raise(ErrorKind::DomainError, "f' is only evaluated on the principal branch r sqrt(t) < pi");
        const double sin_a = std::sin(a);
        return (std::cos(a) / sin_a - a / (sin_a * sin_a)) / (2.0 * s);
    }
    const double s = std::sqrt(-t);
    const double a = r * s;
    const double sinh_a = std::sinh(a);
    return (-1.0 / std::tanh(a) + a / (sinh_a * sinh_a)) / (2.0 * s);
}

double series_k_small_K(double K, double r, double theta, int terms)
{
    if (terms < 2 || terms > static_cast<int>(kCotSeries.size()))
        raise(ErrorKind::BadParameter, "series supports between 2 and 6 terms");
    check_radius(r);
    if (!(std::abs(K) * r * r <= kSeriesWindow))
        raise(ErrorKind::DomainError, "series is only used for |K| r^2 <= 0.1");
    return characteristic_cosine(theta) * f_series(K, r, terms);
}

double k_theta(const SpiralCurvatureQuery& q)
{
    check_admissible(q);
    return characteristic_cosine(q.theta) * f(q.K, q.r);
}

double dk_dK(double K, double r, double theta)
{
    check_admissible({K, r, theta});
    return characteristic_cosine(theta) * f_prime(K, r);
}

double d_abs_k_dK(double K, double r, double theta)
{
    const double k = k_theta(K, r, theta);
    if (k == 0.0)
        return 0.0;
    return (k > 0.0 ? 1.0 : -1.0) * dk_dK(K, r, theta);
}

double first_zero_of_f(double K) noexcept
{
    return K > 0.0 ? std::numbers::pi / (2.0 * std::sqrt(K)) : std::numeric_limits<double>::infinity();
}

double max_radius(double K) noexcept
{
    return K > 0.0 ? std::numbers::pi / std::sqrt(K) : std::numeric_limits<double>::infinity();
}

CurvatureProfile sweep_profile(ProfileAxis axis, double fixed, double min, double max, int steps,
                               double theta)
{
    if (steps < 2)
        raise(ErrorKind::BadParameter, "a profile needs at least 2 steps");
    if (!(min < max) || !std::isfinite(min) || !std::isfinite(max))
        raise(ErrorKind::BadParameter, "profile range must satisfy min < max");

    CurvatureProfile profile{axis, theta, fixed, {}};
    std::vector<double> xs(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double x = i == steps - 1 ? max : min + (max - min) * i / (steps - 1);
        xs[static_cast<std::size_t>(i)] = x;
        const SpiralCurvatureQuery q = axis == ProfileAxis::r ? SpiralCurvatureQuery{fixed, x, theta}
                                                              : SpiralCurvatureQuery{x, fixed, theta};
        check_admissible(q);
    }
    profile.samples.reserve(xs.size());
    for (double x : xs) {
        const double K = axis == ProfileAxis::r ? fixed : x;
        const double r = axis == ProfileAxis::r ? x : fixed;
        profile.samples.push_back({x, k_theta(K, r, theta), evaluation_method(K, r)});
    }
    return profile;
}

} // namespace logspiral
