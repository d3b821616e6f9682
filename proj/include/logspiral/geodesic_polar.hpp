#pragma once

#include "logspiral/curves.hpp"

#include <limits>
#include <span>
#include <vector>

namespace logspiral {

/// Geodesic polar metric dr^2 + G(r) du^2 on a surface of constant curvature K:
/// sqrt(G) solves (sqrt G)_rr + K sqrt G = 0 with sqrt G -> 0, (sqrt G)_r -> 1 as r -> 0.
class PolarMetric {
public:
    explicit PolarMetric(double K) : K_(K) {}

    [[nodiscard]] double K() const noexcept { return K_; }
    [[nodiscard]] double sqrt_g(double r) const;
    [[nodiscard]] double sqrt_g_r(double r) const;
    [[nodiscard]] double g(double r) const
    {
        const double s = sqrt_g(r);
        return s * s;
    }

private:
    double K_;
};

[[nodiscard]] PolarMetric polar_metric(double K);

/// Geodesic curvature (sqrt G)_r / sqrt G of the positively oriented geodesic circle of radius r.
[[nodiscard]] double circle_curvature(double K, double r);

struct PolarTracePoint {
    double r = 0.0;
    double u = 0.0;
};

/// Intrinsic logarithmic spiral u(r) = u0 + cot(theta) * int_{r0}^{r} ds / sqrt(G(s)).
/// Traversed with r increasing, its signed angle from the geodesic circles is -theta.
struct PolarSpiral {
    double K = 0.0;
    double theta = 0.0;
    double r0 = 1.0;
    double u0 = 0.0;
    /// Radius limit for K <= 0 charts; K > 0 is always capped at pi / sqrt(K).
    double r_max = std::numeric_limits<double>::infinity();
};

inline constexpr double kMinTraceAngle = 1e-3;

/// int_{r0}^{r} ds / sqrt(G(s)) in closed form.
[[nodiscard]] double inverse_sqrt_g_integral(double K, double r0, double r);

[[nodiscard]] PolarTracePoint spiral_chart_trace(const PolarSpiral& spiral, double r);
[[nodiscard]] inline PolarTracePoint spiral_chart_trace(double K, double theta, double r0, double u0,
                                                        double r)
{
    return spiral_chart_trace(PolarSpiral{K, theta, r0, u0}, r);
}

/// Geodesic polar coordinates about the pole (sphere) or origin (plane)
/// coincide with the standard chart: (r, u) -> (u, r/R) resp. (u, r).
/// Throws Unsupported for any other surface.
[[nodiscard]] std::vector<ChartPoint> embed_polar_trace(const SurfacePatch& patch,
                                                        std::span<const PolarTracePoint> points);

/// The spiral as a chart curve with t = r over [r_lo, r_hi], oriented outward.
[[nodiscard]] ChartCurve embed_polar_spiral(const SurfacePatch& patch, const PolarSpiral& spiral,
                                            double r_lo, double r_hi);

} // namespace logspiral
