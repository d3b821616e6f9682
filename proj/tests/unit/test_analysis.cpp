#include "logspiral/analysis.hpp"
#include "logspiral/battery.hpp"
#include "logspiral/errors.hpp"
#include "logspiral/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

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

const std::vector<double> kRadii = {1e-1, 1e-2, 1e-3, 1e-4};

} // namespace

TEST(RatioLimit, IdenticalCurvatures)
{
    const auto r = ls::verify_ratio_limit(1.0, 1.0, 0.7, kRadii);
    EXPECT_TRUE(r.passed);
    for (const auto& o : r.observations)
        EXPECT_EQ(o.actual, 1.0);
}

TEST(RatioLimit, OracleDeviations)
{
    // |ratio - 1| for K = 4, K' = -4 at 200 bits.
    const double oracle[] = {0.026316976711990409, 2.6663111706994245e-4, 2.6666631111170709e-6,
                             2.6666666311111117e-8};
    const auto r = ls::verify_ratio_limit(4.0, -4.0, pi / 3, kRadii);
    ASSERT_TRUE(r.passed);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_NEAR(std::abs(r.observations[i].actual - 1.0) / oracle[i], 1.0, 1e-7);
    EXPECT_LE(std::abs(r.observations[2].actual - 1.0), 4e-6);
    EXPECT_NEAR(ls::convergence_slope(r), 2.0, 0.1);
}

TEST(RatioLimit, QuadraticSlope)
{
    EXPECT_NEAR(ls::convergence_slope(ls::verify_ratio_limit(1.0, 0.0, pi / 4, kRadii)), 2.0, 0.1);
}

TEST(RatioLimit, Preconditions)
{
    const std::vector<double> increasing = {1e-3, 1e-2};
    EXPECT_EQ(kind_of([&] { (void)ls::verify_ratio_limit(1, 0, 1, increasing); }), ls::ErrorKind::BadParameter);
    const std::vector<double> bad = {-1e-3};
    EXPECT_EQ(kind_of([&] { (void)ls::verify_ratio_limit(1, 0, 1, bad); }), ls::ErrorKind::DomainError);
    EXPECT_EQ(kind_of([] { (void)ls::verify_ratio_limit(1, 0, pi / 2, kRadii); }), ls::ErrorKind::DomainError);
    EXPECT_EQ(kind_of([] { (void)ls::verify_ratio_limit(1000, 0, 1, kRadii); }), ls::ErrorKind::DomainError);
}

TEST(DerivativeAtZero, Targets)
{
    const std::vector<double> hs = {1e-3, 5e-4, 2.5e-4};
    const auto a = ls::verify_derivative_at_zero(3.0, pi / 3, hs);
    EXPECT_TRUE(a.passed);
    EXPECT_NEAR(a.observations[0].expected, -0.5, 1e-15);
    const auto b = ls::verify_derivative_at_zero(1.0, pi / 4, hs);
    EXPECT_TRUE(b.passed);
    EXPECT_NEAR(b.observations[0].expected, -0.23570226039551584, 1e-16);
    const auto c = ls::verify_derivative_at_zero(2.0, pi / 2, hs);
    EXPECT_TRUE(c.passed);
    for (const auto& o : c.observations)
        EXPECT_LT(std::abs(o.actual), 1e-12);
}

TEST(FMonotone, NegativeSideAndPoleRegion)
{
    std::vector<double> grid;
    for (int i = 0; i < 100; ++i)
        grid.push_back(-10.0 + 9.9 * i / 99.0);
    EXPECT_TRUE(ls::verify_f_monotone(1.0, grid).passed);

    const std::vector<double> near_pole = {9.0, 9.5, 9.8, 9.86};
    const auto r = ls::verify_f_monotone(1.0, near_pole);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.observations.back().actual, -10.0); // f heads to -infinity
}

TEST(FMonotone, DetectsViolation)
{
    // A decreasing grid makes the consecutive-value check meaningless: rejected.
    const std::vector<double> grid = {1.0, 0.5};
    EXPECT_EQ(kind_of([&] { (void)ls::verify_f_monotone(1.0, grid); }), ls::ErrorKind::BadParameter);
}

TEST(SignTheorem, Examples)
{
    const std::vector<double> thetas = {pi / 6, pi / 3, pi / 2, 2 * pi / 3};
    for (double K : {-4.0, 0.0, 4.0})
        EXPECT_TRUE(ls::verify_sign_theorem(K, thetas, 1e-2).passed) << K;
    const std::vector<double> only = {pi / 3};
    EXPECT_LT(ls::verify_sign_theorem(0.0, only, 0.01).observations[1].actual, 0.0);
    EXPECT_EQ(kind_of([] {
                  const std::vector<double> t = {1.0};
                  (void)ls::verify_sign_theorem(1.0, t, 2.0);
              }),
              ls::ErrorKind::PreconditionFailed);
}

TEST(NumericVsClosedForm, BuiltIns)
{
    EXPECT_TRUE(ls::verify_numeric_vs_closed_form(ls::BuiltinSurface::plane, 1.0, pi / 4, 20).passed);
    EXPECT_TRUE(ls::verify_numeric_vs_closed_form(ls::BuiltinSurface::sphere, 1.0, pi / 4, 20).passed);
    const auto p = ls::verify_numeric_vs_closed_form(ls::BuiltinSurface::pseudosphere, 2.0, pi / 3, 20);
    EXPECT_TRUE(p.passed);
    EXPECT_NEAR(p.observations[0].expected, -0.25, 1e-15);
}

TEST(Seam, AgreementAndContinuity)
{
    const std::vector<double> radii = {0.5, 1.0, 3.0};
    EXPECT_TRUE(ls::verify_seam_agreement(radii).passed);
    EXPECT_TRUE(ls::verify_seam_continuity(1.0, pi / 3).passed);
}

TEST(Polar, JacobiLimitsCircle)
{
    for (double K : {-4.0, -1.0, 0.0, 1.0, 4.0}) {
        EXPECT_TRUE(ls::verify_jacobi_equation(K).passed) << K;
        EXPECT_TRUE(ls::verify_polar_limits(K).passed) << K;
        EXPECT_TRUE(ls::verify_circle_curvature(K).passed) << K;
    }
}

TEST(Report, PassedMatchesTolerance)
{
    ls::VerificationReport r{"x", false, 0.5, {}};
    r.add({1.0}, 0.0, 0.5, 0.5);
    r.finalize();
    EXPECT_TRUE(r.passed);
    r.add({2.0}, 0.0, 0.6, 0.6);
    r.finalize();
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.max_error(), 0.6);
}

TEST(Report, JsonFieldNames)
{
    const std::vector<double> radii = {1e-1, 1e-2};
    const std::vector<ls::VerificationReport> reports = {ls::verify_ratio_limit(4, -4, 1.0, radii)};
    const auto doc = nlohmann::json::parse(ls::to_json(reports));
    ASSERT_EQ(doc["reports"].size(), 1U);
    const auto& rep = doc["reports"][0];
    for (const char* key : {"check_name", "passed", "tolerance", "observations"})
        EXPECT_TRUE(rep.contains(key)) << key;
    for (const char* key : {"input", "expected", "actual", "error"})
        EXPECT_TRUE(rep["observations"][0].contains(key)) << key;
    EXPECT_EQ(rep["observations"][0]["input"].size(), 4U);
    EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(Report, TextFormat)
{
    ls::VerificationReport bad{"demo", false, 0.1, {}};
    bad.add({1.0, 2.0}, 0.0, 1.0, 1.0);
    bad.finalize();
    const std::vector<ls::VerificationReport> reports = {bad};
    std::ostringstream os;
    ls::write_text(os, reports);
    EXPECT_EQ(os.str().rfind("FAIL demo", 0), 0U);
    EXPECT_NE(os.str().find("input=(1,2)"), std::string::npos);
}

TEST(Battery, SuitesAndDeterminism)
{
    EXPECT_EQ(ls::parse_suite("forms"), ls::Suite::forms);
    EXPECT_FALSE(ls::parse_suite("bogus").has_value());
    const auto a = ls::run_battery(ls::Suite::analysis);
    const auto b = ls::run_battery(ls::Suite::analysis);
    EXPECT_TRUE(ls::all_passed(a));
    EXPECT_EQ(ls::to_json(a), ls::to_json(b));
    ls::BatteryOptions tight;
    tight.tol_scale = 1e-12;
    EXPECT_FALSE(ls::all_passed(ls::run_battery(ls::Suite::forms, tight)));
    ls::BatteryOptions bad;
    bad.tol_scale = 0.0;
    EXPECT_EQ(kind_of([&] { (void)ls::run_battery(ls::Suite::forms, bad); }), ls::ErrorKind::BadParameter);
}
