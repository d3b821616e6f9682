#pragma once

#include "logspiral/surface.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace logspiral {

struct ChartPoint {
    double u = 0.0;
    double v = 0.0;
};

/// A curve t -> (u(t), v(t)) in the chart of a patch. The embedded curve is
/// patch.point(u(t), v(t)); direction_sign = -1 traverses it backwards.
class ChartCurve {
public:
    using Trace = std::function<ChartPoint(double)>;

    /// `velocity` (d/dt of the trace) is optional; without it chart velocities
    /// are obtained by central differences.
    ChartCurve(SurfacePatch patch, Trace trace, Interval t_domain, int direction_sign = 1,
               Trace velocity = {});

    [[nodiscard]] const SurfacePatch& patch() const noexcept { return patch_; }
    [[nodiscard]] const Interval& t_domain() const noexcept { return t_domain_; }
    [[nodiscard]] int direction_sign() const noexcept { return direction_sign_; }
    [[nodiscard]] bool has_velocity() const noexcept { return static_cast<bool>(velocity_); }

    /// Chart point at t; OutOfDomain if t or the trace leaves its domain.
    [[nodiscard]] ChartPoint at(double t) const;
    [[nodiscard]] Vec3 position(double t) const;
    /// d(u, v)/dt of the parametrization (direction_sign not applied).
    [[nodiscard]] ChartPoint chart_velocity(double t) const;
    /// Embedded velocity d/dt patch(u(t), v(t)), direction_sign not applied.
    [[nodiscard]] Vec3 velocity(double t, JetMode mode = JetMode::analytic) const;

    [[nodiscard]] ChartCurve with_direction(int sign) const;
    [[nodiscard]] ChartCurve with_patch(SurfacePatch patch) const;

private:
    SurfacePatch patch_;
    Trace trace_;
    Trace velocity_;
    Interval t_domain_;
    int direction_sign_;
};

struct CurveSample {
    double t = 0.0;
    Vec3 position;
    double k = 0.0;     ///< geodesic curvature
    double theta = 0.0; ///< signed angle from the parallel, in (-pi, pi]
    std::optional<double> r;
};

/// e^{-at}(cos t, sin t) in the polar plane chart: u = t, v = e^{-at}.
/// Measured angle to the circles is arctan a (pi + arctan a when reversed).
[[nodiscard]] ChartCurve plane_log_spiral(double a, int direction_sign = 1);

/// phi(a ln tan t, 2t) on the sphere of radius R, t in (0, pi/2).
[[nodiscard]] ChartCurve sphere_loxodrome(double R, double a);

/// Loxodrome on the pseudosphere crossing parallels at signed angle theta,
/// parametrized by t = v and oriented toward increasing v. The trace solves
/// du/dv = cot(theta) sqrt(G/E) from v = pi/2 downward (embedded RK 5(4),
/// rel tol 1e-10) and is interpolated with quintic Hermite polynomials.
[[nodiscard]] ChartCurve pseudosphere_loxodrome(double R, double theta, double u0,
                                                double v_floor = kPseudosphereVFloor);

enum class CoordinateCurve { parallel, meridian };

/// Parallel fixes v (t = u), meridian fixes u (t = v).
[[nodiscard]] ChartCurve coordinate_curve(const SurfacePatch& patch, CoordinateCurve which,
                                          double fixed, int direction_sign = 1);

/// Length of the embedded curve between t0 and t1 (negative when t1 < t0).
[[nodiscard]] double arc_length(const ChartCurve& curve, double t0, double t1);

/// <alpha'', N x alpha'> for the unit-speed reparametrization at t, with
/// derivatives of the embedded curve taken by Richardson-extrapolated central
/// differences: of the embedded velocity when the curve has an analytic chart
/// velocity and the jets are analytic, otherwise second differences of the
/// position. Throws NumericalBreakdown when the estimated relative error of
/// alpha'' exceeds 1e-4.
[[nodiscard]] double geodesic_curvature_numeric(const ChartCurve& curve, double t,
                                                JetMode mode = JetMode::analytic);

/// Signed angle from the parallel direction p_u to the curve tangent, measured
/// in-chart with the first fundamental form; positive when <N, p_u x gamma'> > 0.
[[nodiscard]] double angle_to_parallel(const ChartCurve& curve, double t,
                                       JetMode mode = JetMode::analytic);

[[nodiscard]] CurveSample sample_curve(const ChartCurve& curve, double t,
                                       JetMode mode = JetMode::analytic);

} // namespace logspiral
