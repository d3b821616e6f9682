#include "logspiral/errors.hpp"
#include "logspiral/surface.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace ls = logspiral;
using std::numbers::pi;

namespace {

void expect_vec(const ls::Vec3& a, const ls::Vec3& b, double tol = 1e-14)
{
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y, b.y, tol);
    EXPECT_NEAR(a.z, b.z, tol);
}

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

TEST(EvalJet, PlaneAtUnitRadius)
{
    for (auto mode : {ls::JetMode::analytic, ls::JetMode::finite_difference}) {
        const ls::Jet2 j = ls::eval_jet(ls::make_plane(), 0.0, 1.0, mode);
        expect_vec(j.p, {1, 0, 0});
        expect_vec(j.p_u, {0, 1, 0}, 1e-9);
        expect_vec(j.p_v, {1, 0, 0}, 1e-9);
    }
}

TEST(EvalJet, SphereEquator)
{
    const ls::Jet2 j = ls::eval_jet(ls::make_sphere(1.0), 0.0, pi / 2);
    expect_vec(j.p, {1, 0, 0});
    expect_vec(j.p_v, {0, 0, -1});
}

TEST(EvalJet, PseudosphereRimIsEvaluable)
{
    const ls::Jet2 j = ls::eval_jet(ls::make_pseudosphere(1.0), 0.0, pi / 2);
    expect_vec(j.p, {1, 0, 0});
}

TEST(EvalJet, OutOfDomain)
{
    EXPECT_EQ(kind_of([] { (void)ls::eval_jet(ls::make_sphere(1.0), 0.0, -0.1); }),
              ls::ErrorKind::OutOfDomain);
    EXPECT_EQ(kind_of([] { (void)ls::eval_jet(ls::make_pseudosphere(1.0), 0.0, 5e-4); }),
              ls::ErrorKind::OutOfDomain);
    EXPECT_EQ(kind_of([] { (void)ls::eval_jet(ls::make_plane(), 0.0, 0.0); }),
              ls::ErrorKind::OutOfDomain);
    // The difference stencil would cross the rim.
    EXPECT_EQ(kind_of([] {
                  (void)ls::eval_jet(ls::make_pseudosphere(1.0), 0.0, pi / 2,
                                     ls::JetMode::finite_difference);
              }),
              ls::ErrorKind::OutOfDomain);
}

TEST(EvalJet, DegenerateInteriorPoint)
{
    // Profile touching the axis at v = 0 inside the domain: x(v) = v^2.
    ls::ProfileCurve c;
    c.x = [](double v) { return v * v; };
    c.z = [](double v) { return v; };
    c.dx = [](double v) { return 2 * v; };
    c.dz = [](double) { return 1.0; };
    c.ddx = [](double) { return 2.0; };
    c.ddz = [](double) { return 0.0; };
    const auto patch = ls::make_surface_of_revolution(c, ls::Interval::open(-1, 1));
    EXPECT_EQ(kind_of([&] { (void)ls::eval_jet(patch, 0.3, 0.0); }), ls::ErrorKind::DegenerateJet);
}

TEST(UnitNormal, BuiltinOrientations)
{
    const auto plane = ls::make_plane();
    expect_vec(ls::unit_normal(ls::eval_jet(plane, 1.3, 2.0), plane.orientation_sign()), {0, 0, 1});
    const auto sphere = ls::make_sphere(1.0);
    const ls::Jet2 j = ls::eval_jet(sphere, 0.0, pi / 2);
    expect_vec(ls::unit_normal(j, sphere.orientation_sign()), {1, 0, 0});
    expect_vec(ls::unit_normal(j, -sphere.orientation_sign()), {-1, 0, 0});
}

TEST(FundamentalForms, Sphere)
{
    const double R = 1.7;
    for (double v : {0.3, 1.0, 2.5}) {
        const auto ff = ls::fundamental_forms(ls::make_sphere(R), 0.4, v);
        EXPECT_NEAR(ff.E, R * R * std::sin(v) * std::sin(v), 1e-13);
        EXPECT_NEAR(ff.F, 0.0, 1e-13);
        EXPECT_NEAR(ff.G, R * R, 1e-13);
    }
}

TEST(FundamentalForms, PseudosphereMeridianCoefficients)
{
    const double R = 2.0;
    for (double v : {0.2, 0.7, 1.3}) {
        const auto ff = ls::fundamental_forms(ls::make_pseudosphere(R), 0.9, v);
        const double cot = std::cos(v) / std::sin(v);
        EXPECT_NEAR(ff.G, R * R * cot * cot, 1e-12 * (1 + ff.G));
        EXPECT_NEAR(ff.g, -R * cot, 1e-12 * (1 + std::abs(ff.g)));
    }
}

TEST(FundamentalForms, PlaneSecondFormVanishes)
{
    for (auto mode : {ls::JetMode::analytic, ls::JetMode::finite_difference}) {
        const auto ff = ls::fundamental_forms(ls::make_plane(), 0.5, 1.5, mode);
        EXPECT_NEAR(ff.e, 0.0, 1e-9);
        EXPECT_NEAR(ff.f, 0.0, 1e-9);
        EXPECT_NEAR(ff.g, 0.0, 1e-9);
    }
}

TEST(GaussianCurvature, BuiltIns)
{
    EXPECT_NEAR(ls::gaussian_curvature(ls::make_sphere(2.0), 1.0, 1.0), 0.25, 1e-14);
    EXPECT_NEAR(ls::gaussian_curvature(ls::make_pseudosphere(1.0), 1.0, 1.0), -1.0, 1e-13);
    EXPECT_EQ(ls::gaussian_curvature(ls::make_plane(), 1.0, 1.0), 0.0);
}

TEST(GaussianCurvature, GenericRevolutionMatchesSphere)
{
    // Unit sphere through the generic constructor, numeric jets only.
    ls::ProfileCurve c;
    c.x = [](double v) { return std::sin(v); };
    c.z = [](double v) { return std::cos(v); };
    const auto patch = ls::make_surface_of_revolution(c, ls::Interval::open(0, pi), 1, 1.0);
    EXPECT_FALSE(patch.has_analytic_jet());
    EXPECT_NEAR(ls::gaussian_curvature(patch, 0.2, 1.1, ls::JetMode::finite_difference), 1.0, 1e-5);
}

TEST(GaussianCurvature, ProfileDerivativesGiveAnalyticJet)
{
    // Catenoid: x = cosh v, z = v, K = -1/cosh^4 v.
    ls::ProfileCurve c;
    c.x = [](double v) { return std::cosh(v); };
    c.z = [](double v) { return v; };
    c.dx = [](double v) { return std::sinh(v); };
    c.dz = [](double) { return 1.0; };
    c.ddx = [](double v) { return std::cosh(v); };
    c.ddz = [](double) { return 0.0; };
    const auto patch = ls::make_surface_of_revolution(c, ls::Interval::open(-2, 2));
    ASSERT_TRUE(patch.has_analytic_jet());
    for (double v : {-1.0, 0.0, 0.5}) {
        const double expected = -1.0 / std::pow(std::cosh(v), 4);
        EXPECT_NEAR(ls::gaussian_curvature(patch, 0.3, v), expected, 1e-13);
        EXPECT_NEAR(ls::gaussian_curvature(patch, 0.3, v, ls::JetMode::finite_difference), expected,
                    1e-6);
    }
}

TEST(Patch, BadParameters)
{
    EXPECT_EQ(kind_of([] { (void)ls::make_sphere(0.0); }), ls::ErrorKind::BadParameter);
    EXPECT_EQ(kind_of([] { (void)ls::make_pseudosphere(-1.0); }), ls::ErrorKind::BadParameter);
    EXPECT_EQ(kind_of([] { (void)ls::make_sphere(1.0).with_orientation(0); }),
              ls::ErrorKind::BadParameter);
}
