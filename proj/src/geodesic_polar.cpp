#include "logspiral/geodesic_polar.hpp"

#include "logspiral/closed_form.hpp"
#include "logspiral/errors.hpp"

#include <cmath>
#include <numbers>

namespace logspiral {

namespace {

void check_polar_radius(double K, double r, bool allow_zero)
{
    if (!std::isfinite(r) || r < 0.0 || (!allow_zero && r == 0.0))
        raise(ErrorKind::DomainError, "geodesic radius must be positive and finite");
    if (K > 0.0 && !(r * std::sqrt(K) < std::numbers::pi))
        raise(ErrorKind::DomainError, "geodesic radius must stay below pi / sqrt(K)");
}

/// h(z) = ln(tan(x/2) / (x/2)) with x = sqrt(z); tanh for z < 0. Same series either side.
double log_tan_ratio(double z)
{
    if (std::abs(z) < kSeamThreshold)
        return z * (1.0 / 12.0 + z * (7.0 / 1440.0 + z * (62.0 / 181440.0)));
    if (z > 0.0) {
        const double half = std::sqrt(z) / 2.0;
        return std::log(std::tan(half) / half);
    }
    const double half = std::sqrt(-z) / 2.0;
    return std::log(std::tanh(half) / half);
}

double cot(double theta) { return characteristic_cosine(theta) / std::sin(theta); }

void check_trace_angle(double theta)
{
    if (!(theta >= kMinTraceAngle && theta <= std::numbers::pi - kMinTraceAngle))
        raise(ErrorKind::DomainError, "spiral angle must lie in [1e-3, pi - 1e-3]");
}

void check_spiral_radius(const PolarSpiral& s, double r)
{
    check_polar_radius(s.K, r, false);
    if (r > s.r_max)
        raise(ErrorKind::DomainError, "geodesic radius exceeds the configured r_max");
}

double chart_scale(const SurfacePatch& patch, double K)
{
    switch (patch.kind()) {
    case SurfaceKind::plane:
        if (K != 0.0)
            raise(ErrorKind::BadParameter, "a plane trace needs K = 0");
        return 1.0;
    case SurfaceKind::sphere: {
        const double R = patch.radius();
        const double expected = 1.0 / (R * R);
        if (std::abs(K - expected) > 1e-12 * expected)
            raise(ErrorKind::BadParameter, "trace curvature does not match the sphere radius");
        return R;
    }
    default:
        raise(ErrorKind::Unsupported,
              "geodesic polar traces embed only into the built-in plane and sphere");
    }
}

} // namespace

double PolarMetric::sqrt_g(double r) const
{
    check_polar_radius(K_, r, true);
    const double z = K_ * r * r;
    if (std::abs(z) < kSeamThreshold)
        return r * (1.0 + z * (-1.0 / 6.0 + z * (1.0 / 120.0 + z * (-1.0 / 5040.0))));
    if (K_ > 0.0) {
        const double s = std::sqrt(K_);
        return std::sin(r * s) / s;
    }
    const double s = std::sqrt(-K_);
    return std::sinh(r * s) / s;
}

double PolarMetric::sqrt_g_r(double r) const
{
    check_polar_radius(K_, r, true);
    const double z = K_ * r * r;
    if (std::abs(z) < kSeamThreshold)
        return 1.0 + z * (-0.5 + z * (1.0 / 24.0 + z * (-1.0 / 720.0)));
    if (K_ > 0.0)
        return std::cos(r * std::sqrt(K_));
    return std::cosh(r * std::sqrt(-K_));
}

PolarMetric polar_metric(double K)
{
    if (!std::isfinite(K))
        raise(ErrorKind::DomainError, "K must be finite");
    return PolarMetric(K);
}

double circle_curvature(double K, double r)
{
    check_polar_radius(K, r, false);
    const PolarMetric m = polar_metric(K);
    return m.sqrt_g_r(r) / m.sqrt_g(r);
}

double inverse_sqrt_g_integral(double K, double r0, double r)
{
    check_polar_radius(K, r0, false);
    check_polar_radius(K, r, false);
    // ln tan(x/2) = ln(x/2) + h(x^2), so the sqrt(K) factors cancel in the difference.
    return std::log(r / r0) + log_tan_ratio(K * r * r) - log_tan_ratio(K * r0 * r0);
}

PolarTracePoint spiral_chart_trace(const PolarSpiral& spiral, double r)
{
    check_trace_angle(spiral.theta);
    check_spiral_radius(spiral, spiral.r0);
    check_spiral_radius(spiral, r);
    return {r, spiral.u0 + cot(spiral.theta) * inverse_sqrt_g_integral(spiral.K, spiral.r0, r)};
}

std::vector<ChartPoint> embed_polar_trace(const SurfacePatch& patch,
                                          std::span<const PolarTracePoint> points)
{
    double scale = 1.0;
    if (patch.kind() == SurfaceKind::sphere)
        scale = patch.radius();
    else if (patch.kind() != SurfaceKind::plane)
        raise(ErrorKind::Unsupported,
              "geodesic polar traces embed only into the built-in plane and sphere");

    std::vector<ChartPoint> out;
    out.reserve(points.size());
    for (const PolarTracePoint& p : points) {
        const ChartPoint c{p.u, p.r / scale};
        if (!patch.contains(c.u, c.v))
            raise(ErrorKind::OutOfDomain, "trace point does not map into the chart");
        out.push_back(c);
    }
    return out;
}

ChartCurve embed_polar_spiral(const SurfacePatch& patch, const PolarSpiral& spiral, double r_lo,
                              double r_hi)
{
    const double scale = chart_scale(patch, spiral.K);
    if (!(r_lo < r_hi))
        raise(ErrorKind::BadParameter, "radius range must satisfy r_lo < r_hi");
    (void)spiral_chart_trace(spiral, r_lo);
    (void)spiral_chart_trace(spiral, r_hi);

    const PolarMetric metric = polar_metric(spiral.K);
    const double cot_theta = cot(spiral.theta);
    return ChartCurve(
        patch,
        [spiral, scale](double r) {
            const PolarTracePoint p = spiral_chart_trace(spiral, r);
            return ChartPoint{p.u, p.r / scale};
        },
        Interval::closed(r_lo, r_hi), 1,
        [metric, cot_theta, scale](double r) {
            return ChartPoint{cot_theta / metric.sqrt_g(r), 1.0 / scale};
        });
}

} // namespace logspiral
