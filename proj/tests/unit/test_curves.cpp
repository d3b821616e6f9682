#include "logspiral/curves.hpp"
#include "logspiral/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace ls = logspiral;
using std::numbers::pi;

namespace {

ls::ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const ls::GeometryError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no GeometryError thrown";
    return ls::ErrorKind::Unsupported;
}

} // namespace

TEST(PlaneLogSpiral, Trace)
{
    const auto c = ls::plane_log_spiral(1.0);
    const ls::Vec3 p0 = c.position(0.0);
    EXPECT_DOUBLE_EQ(p0.x, 1.0);
    EXPECT_DOUBLE_EQ(p0.y, 0.0);
    EXPECT_NEAR(c.at(std::log(2.0)).v, 0.5, 1e-16);
    EXPECT_NEAR(std::sin(ls::angle_to_parallel(c, 0.7)), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(kind_of([] { (void)ls::plane_log_spiral(0.0); }), ls::ErrorKind::BadParameter);
}

TEST(PlaneLogSpiral, ReversedSpiralAngle)
{
    const auto c = ls::plane_log_spiral(-1.0, -1);
    EXPECT_NEAR(ls::angle_to_parallel(c, 0.3), 3 * pi / 4, 1e-14);
}

TEST(SphereLoxodrome, TraceAndSpeed)
{
    const double R = 1.5, a = 0.8;
    const auto c = ls::sphere_loxodrome(R, a);
    const ls::ChartPoint q = c.at(pi / 4);
    EXPECT_NEAR(q.u, 0.0, 1e-15);
    EXPECT_NEAR(q.v, pi / 2, 1e-15);
    for (double t : {0.2, 0.8, 1.3})
        EXPECT_NEAR(ls::norm(c.velocity(t)), 2 * R * std::sqrt(1 + a * a), 1e-13);
    EXPECT_EQ(kind_of([&] { (void)c.at(pi / 2); }), ls::ErrorKind::OutOfDomain);
    EXPECT_EQ(kind_of([] { (void)ls::sphere_loxodrome(1.0, 0.0); }), ls::ErrorKind::BadParameter);
}

TEST(SphereLoxodrome, AngleMagnitudeIsArccot)
{
    // With the outward normal the signed angle is -arccot a; |sin| = 1/sqrt(1 + a^2).
    const auto c = ls::sphere_loxodrome(1.0, 1.0);
    for (double t : {0.1, 0.6, 1.2}) {
        EXPECT_NEAR(ls::angle_to_parallel(c, t), -pi / 4, 1e-14);
        EXPECT_NEAR(std::abs(std::sin(ls::angle_to_parallel(c, t))), 1 / std::sqrt(2.0), 1e-14);
    }
}

TEST(PseudosphereLoxodrome, MatchesClosedFormTrace)
{
    // u = u0 + cot(theta) (1 - 1/sin v) solves du/dv = cot(theta) cos v / sin^2 v.
    const double theta = pi / 3, u0 = 0.25;
    const auto c = ls::pseudosphere_loxodrome(1.0, theta, u0);
    const double cot = 1 / std::tan(theta);
    for (double v : {0.01, 0.1, 0.5, 1.0, 1.5, pi / 2})
        EXPECT_NEAR(c.at(v).u, u0 + cot * (1 - 1 / std::sin(v)), 1e-8 * (1 + 1 / std::sin(v)));
    EXPECT_NEAR(ls::pseudosphere_loxodrome(1.0, theta, 0.0).at(0.5).u, -0.62690403664172463, 1e-9);
}

TEST(PseudosphereLoxodrome, MeridianAndAngle)
{
    const auto m = ls::pseudosphere_loxodrome(2.0, pi / 2, 0.7);
    for (double v : {0.1, 0.9, 1.5})
        EXPECT_EQ(m.at(v).u, 0.7);
    for (double theta : {0.4, 1.0, 2.5}) {
        const auto c = ls::pseudosphere_loxodrome(2.0, theta, 0.0);
        for (double v : {0.05, 0.6, 1.2, 1.55})
            EXPECT_NEAR(ls::angle_to_parallel(c, v), theta, 1e-8);
    }
    EXPECT_EQ(kind_of([] { (void)ls::pseudosphere_loxodrome(1.0, pi / 3, 0.0).at(5e-4); }),
              ls::ErrorKind::OutOfDomain);
    EXPECT_EQ(kind_of([] { (void)ls::pseudosphere_loxodrome(1.0, 0.0, 0.0); }),
              ls::ErrorKind::BadParameter);
}

TEST(CoordinateCurve, Examples)
{
    const auto eq = ls::coordinate_curve(ls::make_sphere(1.0), ls::CoordinateCurve::parallel, pi / 2);
    for (double t : {0.0, 1.0, 4.0}) {
        EXPECT_NEAR(eq.position(t).z, 0.0, 1e-16);
        EXPECT_NEAR(ls::norm(eq.position(t)), 1.0, 1e-15);
    }
    const auto ray = ls::coordinate_curve(ls::make_plane(), ls::CoordinateCurve::meridian, 0.0);
    const ls::Vec3 p = ray.position(3.0);
    EXPECT_EQ(p.x, 3.0);
    EXPECT_EQ(p.y, 0.0);
    const auto rim =
        ls::coordinate_curve(ls::make_pseudosphere(2.0), ls::CoordinateCurve::parallel, pi / 2);
    EXPECT_NEAR(ls::norm(rim.position(1.1)), 2.0, 1e-15);
    EXPECT_NEAR(ls::angle_to_parallel(rim, 0.5), 0.0, 0.0);
    EXPECT_EQ(kind_of([] {
                  (void)ls::coordinate_curve(ls::make_sphere(1.0), ls::CoordinateCurve::parallel, 4.0);
              }),
              ls::ErrorKind::OutOfDomain);
}

TEST(ArcLength, Examples)
{
    const auto eq = ls::coordinate_curve(ls::make_sphere(1.0), ls::CoordinateCurve::parallel, pi / 2);
    EXPECT_NEAR(ls::arc_length(eq, 0.0, 2 * pi), 2 * pi, 1e-12);
    EXPECT_NEAR(ls::arc_length(ls::plane_log_spiral(1.0), 0.0, 2.0), 1.2228205693522732, 1e-12);
    const auto meridian = ls::coordinate_curve(ls::make_sphere(1.0), ls::CoordinateCurve::meridian, 0.0);
    EXPECT_NEAR(ls::arc_length(meridian, 0.0, pi / 2), pi / 2, 1e-12);
    EXPECT_NEAR(ls::arc_length(meridian, pi / 2, 0.0), -pi / 2, 1e-12);
    EXPECT_EQ(kind_of([&] { (void)ls::arc_length(meridian, -0.1, 1.0); }), ls::ErrorKind::OutOfDomain);
}

TEST(GeodesicCurvature, CoordinateCurveExamples)
{
    const auto plane = ls::make_plane();
    for (double v : {0.5, 2.0}) {
        const auto circle = ls::coordinate_curve(plane, ls::CoordinateCurve::parallel, v);
        EXPECT_NEAR(ls::geodesic_curvature_numeric(circle, 0.4), 1 / v, 1e-9);
    }
    const auto meridian = ls::coordinate_curve(ls::make_sphere(1.0), ls::CoordinateCurve::meridian, 0.3);
    EXPECT_NEAR(ls::geodesic_curvature_numeric(meridian, 1.0), 0.0, 1e-10);
    for (double R : {1.0, 3.0}) {
        const auto par =
            ls::coordinate_curve(ls::make_pseudosphere(R), ls::CoordinateCurve::parallel, 0.8);
        EXPECT_NEAR(ls::geodesic_curvature_numeric(par, 0.2), -1 / R, 1e-9);
    }
}

TEST(GeodesicCurvature, BothPathsAgree)
{
    // Without an analytic chart velocity the second-difference path is used.
    const auto with = ls::sphere_loxodrome(1.0, 0.7);
    const ls::ChartCurve without(with.patch(), [&](double t) { return with.at(t); }, with.t_domain());
    for (double t : {0.3, 0.8, 1.2})
        EXPECT_NEAR(ls::geodesic_curvature_numeric(without, t), ls::geodesic_curvature_numeric(with, t),
                    1e-7);
}

TEST(GeodesicCurvature, BoundaryIsRejected)
{
    const auto c = ls::pseudosphere_loxodrome(1.0, pi / 3, 0.0);
    EXPECT_EQ(kind_of([&] { (void)ls::geodesic_curvature_numeric(c, pi / 2); }),
              ls::ErrorKind::OutOfDomain);
}

TEST(SampleCurve, Fields)
{
    const auto s = ls::sample_curve(ls::plane_log_spiral(1.0), 0.0);
    EXPECT_EQ(s.t, 0.0);
    EXPECT_NEAR(s.k, std::cos(pi / 4), 1e-10);
    EXPECT_NEAR(s.theta, pi / 4, 1e-15);
    EXPECT_GT(s.theta, -pi);
    EXPECT_LE(s.theta, pi);
}
