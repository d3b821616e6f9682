#include "logspiral/curves.hpp"

#include "logspiral/errors.hpp"
#include "logspiral/numerics.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <utility>

namespace logspiral {

namespace {

constexpr double kBreakdownTolerance = 1e-4;
constexpr double kOdeRelTol = 1e-10;
constexpr double kOdeAbsTol = 1e-12;

void require_sign(int sign, const char* what)
{
    if (sign != 1 && sign != -1)
        raise(ErrorKind::BadParameter, std::string(what) + " must be +1 or -1");
}

// Step for curvature differences: eps^(1/6) balances the O(h^4) truncation of
// one Richardson level against eps/h^2 round-off in the second difference.
double curvature_step(const Interval& domain, double t)
{
    const double h = std::pow(numerics::kEpsilon, 1.0 / 6.0) * std::max(1.0, std::abs(t));
    return std::min(h, 0.9 * domain.distance_to_boundary(t));
}

// Same balance for a first difference of the velocity: eps^(1/5).
double velocity_step(const Interval& domain, double t)
{
    const double h = std::pow(numerics::kEpsilon, 1.0 / 5.0) * std::max(1.0, std::abs(t));
    return std::min(h, 0.9 * domain.distance_to_boundary(t));
}

/// du/dv = cot(theta) sqrt(G/E) on the pseudosphere, with E = R^2 sin^2 v and
/// G = R^2 cos^2 v csc^2 v; R cancels.
struct LoxodromeSlope {
    double cot_theta;

    [[nodiscard]] double operator()(double v) const
    {
        const double s = std::sin(v);
        return cot_theta * std::cos(v) / (s * s);
    }

    [[nodiscard]] double derivative(double v) const
    {
        const double s = std::sin(v);
        const double c = std::cos(v);
        return -cot_theta * (1.0 + c * c) / (s * s * s);
    }
};

/// Accepted ODE steps with u, u', u'' at each knot, evaluated by quintic
/// Hermite interpolation so the trace is C^2 across knots.
class HermiteTable {
public:
    HermiteTable(LoxodromeSlope slope, double u0, double v_floor) : slope_(slope)
    {
        namespace odeint = boost::numeric::odeint;
        using State = std::vector<double>;

        // Integrate in w = pi/2 - v so time runs forward: du/dw = -du/dv.
        const double top = std::numbers::pi / 2;
        const auto system = [this, top](const State& x, State& dxdw, double w) {
            (void)x;
            dxdw[0] = -slope_(top - w);
        };
        std::vector<double> ws;
        std::vector<double> us;
        State x{u0};
        odeint::integrate_adaptive(
            odeint::make_controlled(kOdeAbsTol, kOdeRelTol, odeint::runge_kutta_dopri5<State>()),
            system, x, 0.0, top - v_floor, 1e-3, [&](const State& s, double w) {
                ws.push_back(w);
                us.push_back(s[0]);
            });

        const std::size_t n = ws.size();
        v_.resize(n);
        u_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            v_[n - 1 - i] = top - ws[i];
            u_[n - 1 - i] = us[i];
        }
        // Pin the end knots onto the exact domain bounds.
        v_.front() = v_floor;
        v_.back() = top;
    }

    [[nodiscard]] double operator()(double v) const
    {
        auto it = std::upper_bound(v_.begin(), v_.end(), v);
        std::size_t i = it == v_.begin() ? 0 : static_cast<std::size_t>(it - v_.begin()) - 1;
        i = std::min(i, v_.size() - 2);

        const double v0 = v_[i];
        const double v1 = v_[i + 1];
        const double dv = v1 - v0;
        const double s = (v - v0) / dv;
        const double s2 = s * s;
        const double s3 = s2 * s;
        const double s4 = s3 * s;
        const double s5 = s4 * s;

        const double h0 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
        const double h1 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
        const double h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
        const double h3 = 0.5 * s3 - s4 + 0.5 * s5;
        const double h4 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
        const double h5 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;

        return u_[i] * h0 + slope_(v0) * dv * h1 + slope_.derivative(v0) * dv * dv * h2 +
               slope_.derivative(v1) * dv * dv * h3 + slope_(v1) * dv * h4 + u_[i + 1] * h5;
    }

private:
    LoxodromeSlope slope_;
    std::vector<double> v_;
    std::vector<double> u_;
};

} // namespace

ChartCurve::ChartCurve(SurfacePatch patch, Trace trace, Interval t_domain, int direction_sign,
                       Trace velocity)
    : patch_(std::move(patch)), trace_(std::move(trace)), velocity_(std::move(velocity)),
      t_domain_(t_domain), direction_sign_(direction_sign)
{
    if (!trace_)
        raise(ErrorKind::BadParameter, "chart curve needs a trace");
    require_sign(direction_sign_, "curve direction sign");
    if (!(t_domain_.lo < t_domain_.hi))
        raise(ErrorKind::BadParameter, "curve parameter domain is degenerate");
}

ChartPoint ChartCurve::at(double t) const
{
    if (!t_domain_.contains(t))
        raise(ErrorKind::OutOfDomain, "curve parameter outside its domain");
    const ChartPoint p = trace_(t);
    if (!patch_.contains(p.u, p.v))
        raise(ErrorKind::OutOfDomain, "curve trace leaves the patch domain");
    return p;
}

Vec3 ChartCurve::position(double t) const
{
    const ChartPoint p = at(t);
    return patch_.point(p.u, p.v);
}

ChartPoint ChartCurve::chart_velocity(double t) const
{
    if (velocity_) {
        (void)at(t);
        return velocity_(t);
    }
    const double h =
        std::min(numerics::first_derivative_step(t), 0.2 * t_domain_.distance_to_boundary(t));
    if (!(h > 0.0))
        raise(ErrorKind::OutOfDomain, "no room for a velocity stencil at the domain edge");
    const auto du = numerics::richardson_first<double>([&](double s) { return at(s).u; }, t, h);
    const auto dv = numerics::richardson_first<double>([&](double s) { return at(s).v; }, t, h);
    return {du.value, dv.value};
}

Vec3 ChartCurve::velocity(double t, JetMode mode) const
{
    const ChartPoint p = at(t);
    const Jet2 jet = eval_jet(patch_, p.u, p.v, mode);
    const ChartPoint w = chart_velocity(t);
    return jet.p_u * w.u + jet.p_v * w.v;
}

ChartCurve ChartCurve::with_direction(int sign) const
{
    require_sign(sign, "curve direction sign");
    ChartCurve copy = *this;
    copy.direction_sign_ = sign;
    return copy;
}

ChartCurve ChartCurve::with_patch(SurfacePatch patch) const
{
    ChartCurve copy = *this;
    copy.patch_ = std::move(patch);
    return copy;
}

ChartCurve plane_log_spiral(double a, int direction_sign)
{
    if (a == 0.0 || !std::isfinite(a))
        raise(ErrorKind::BadParameter, "plane spiral needs a finite a != 0 (a = 0 is a circle)");
    return ChartCurve(
        make_plane(), [a](double t) { return ChartPoint{t, std::exp(-a * t)}; }, Interval::whole(),
        direction_sign, [a](double t) { return ChartPoint{1.0, -a * std::exp(-a * t)}; });
}

ChartCurve sphere_loxodrome(double R, double a)
{
    if (a == 0.0 || !std::isfinite(a))
        raise(ErrorKind::BadParameter, "sphere loxodrome needs a finite a != 0");
    return ChartCurve(
        make_sphere(R), [a](double t) { return ChartPoint{a * std::log(std::tan(t)), 2.0 * t}; },
        Interval::open(0.0, std::numbers::pi / 2), 1,
        [a](double t) { return ChartPoint{2.0 * a / std::sin(2.0 * t), 2.0}; });
}

ChartCurve pseudosphere_loxodrome(double R, double theta, double u0, double v_floor)
{
    if (!(theta > 0.0 && theta < std::numbers::pi))
        raise(ErrorKind::BadParameter, "loxodrome angle must lie in (0, pi)");
    SurfacePatch patch = make_pseudosphere(R, v_floor);
    const LoxodromeSlope slope{std::cos(theta) / std::sin(theta)};
    const Interval domain = patch.domain().v;

    if (theta == std::numbers::pi / 2) {
        return ChartCurve(
            std::move(patch), [u0](double t) { return ChartPoint{u0, t}; }, domain, 1,
            [](double) { return ChartPoint{0.0, 1.0}; });
    }
    auto table = std::make_shared<const HermiteTable>(slope, u0, v_floor);
    return ChartCurve(
        std::move(patch), [table](double t) { return ChartPoint{(*table)(t), t}; }, domain, 1,
        [slope](double t) { return ChartPoint{slope(t), 1.0}; });
}

ChartCurve coordinate_curve(const SurfacePatch& patch, CoordinateCurve which, double fixed,
                            int direction_sign)
{
    const auto& dom = patch.domain();
    if (which == CoordinateCurve::parallel) {
        if (!dom.v.contains(fixed))
            raise(ErrorKind::OutOfDomain, "parallel v outside the patch domain");
        return ChartCurve(
            patch, [fixed](double t) { return ChartPoint{t, fixed}; }, dom.u, direction_sign,
            [](double) { return ChartPoint{1.0, 0.0}; });
    }
    if (!dom.u.contains(fixed))
        raise(ErrorKind::OutOfDomain, "meridian u outside the patch domain");
    return ChartCurve(
        patch, [fixed](double t) { return ChartPoint{fixed, t}; }, dom.v, direction_sign,
        [](double) { return ChartPoint{0.0, 1.0}; });
}

double arc_length(const ChartCurve& curve, double t0, double t1)
{
    const Interval& dom = curve.t_domain();
    for (double t : {t0, t1}) {
        if (!(t >= dom.lo && t <= dom.hi) || !std::isfinite(t))
            raise(ErrorKind::OutOfDomain, "arc length bounds outside the curve domain");
    }
    return numerics::integrate([&](double s) { return norm(curve.velocity(s)); }, t0, t1, 1e-10);
}

double geodesic_curvature_numeric(const ChartCurve& curve, double t, JetMode mode)
{
    if (!curve.t_domain().interior(t))
        raise(ErrorKind::OutOfDomain, "curvature needs an interior curve parameter");
    const auto position = [&](double s) { return curve.position(s); };
    const Vec3 p0 = position(t);
    numerics::Estimate<Vec3> d1;
    numerics::Estimate<Vec3> d2;
    if (curve.has_velocity() && mode == JetMode::analytic) {
        const auto velocity = [&](double s) { return curve.velocity(s, mode); };
        d1 = {velocity(t), 0.0};
        d2 = numerics::richardson_first<Vec3>(velocity, t, velocity_step(curve.t_domain(), t));
    } else {
        const double h = curvature_step(curve.t_domain(), t);
        d1 = numerics::richardson_first<Vec3>(position, t, h);
        d2 = numerics::richardson_second<Vec3>(position, t, h, p0);
    }

    const double speed = norm(d1.value);
    if (!(speed > 0.0) || !std::isfinite(speed))
        raise(ErrorKind::DegenerateJet, "curve has zero speed");
    const Vec3 tangent = d1.value / speed;
    const Vec3 accel = (d2.value - tangent * dot(d2.value, tangent)) / (speed * speed);

    const double accel_error =
        d2.error / (speed * speed) + 2.0 * norm(accel) * d1.error / speed;
    const double scale = std::max(norm(accel), 1.0 / std::max(1.0, norm(p0)));
    if (!(accel_error <= kBreakdownTolerance * scale))
        raise(ErrorKind::NumericalBreakdown, "second derivative estimate is not converged");

    const ChartPoint cp = curve.at(t);
    const Vec3 N = unit_normal(eval_jet(curve.patch(), cp.u, cp.v, mode),
                               curve.patch().orientation_sign());
    const Vec3 alpha_prime = tangent * static_cast<double>(curve.direction_sign());
    return dot(accel, cross(N, alpha_prime));
}

double angle_to_parallel(const ChartCurve& curve, double t, JetMode mode)
{
    const ChartPoint cp = curve.at(t);
    const Jet2 jet = eval_jet(curve.patch(), cp.u, cp.v, mode);
    const ChartPoint w = curve.chart_velocity(t);
    const double dir = static_cast<double>(curve.direction_sign());
    const double du = dir * w.u;
    const double dv = dir * w.v;

    const double E = dot(jet.p_u, jet.p_u);
    const double F = dot(jet.p_u, jet.p_v);
    const double G = dot(jet.p_v, jet.p_v);
    const double det = E * G - F * F;
    if (!(E > 0.0) || !(det > 0.0))
        raise(ErrorKind::DegenerateJet, "parallel tangent or metric degenerates");

    const double cos_part = E * du + F * dv;
    const double sin_part = static_cast<double>(curve.patch().orientation_sign()) * dv * std::sqrt(det);
    if (cos_part == 0.0 && sin_part == 0.0)
        raise(ErrorKind::DegenerateJet, "curve has zero chart velocity");
    const double angle = std::atan2(sin_part, cos_part);
    return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

CurveSample sample_curve(const ChartCurve& curve, double t, JetMode mode)
{
    CurveSample s;
    s.t = t;
    s.position = curve.position(t);
    s.k = geodesic_curvature_numeric(curve, t, mode);
    s.theta = angle_to_parallel(curve, t, mode);
    return s;
}

} // namespace logspiral
