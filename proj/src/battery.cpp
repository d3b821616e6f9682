#include "logspiral/battery.hpp"

#include "logspiral/closed_form.hpp"
#include "logspiral/curves.hpp"
#include "logspiral/errors.hpp"
#include "logspiral/geodesic_polar.hpp"
#include "logspiral/liouville.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace logspiral {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

double rel(double expected, double actual)
{
    const double d = std::abs(actual - expected);
    return expected == 0.0 ? d : d / std::abs(expected);
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

class Runner {
public:
    Runner(const BatteryOptions& options, std::vector<VerificationReport>& out)
        : options_(options), out_(out)
    {
    }

    [[nodiscard]] JetMode jets() const noexcept { return options_.jets; }

    /// jet_sensitive checks get the extra factor 100 under finite-difference jets.
    void run(const std::string& name, bool jet_sensitive,
             const std::function<VerificationReport()>& check)
    {
        VerificationReport report;
        try {
            report = check();
        } catch (const GeometryError& e) {
            report = {name + " [" + std::string(to_string(e.kind())) + ": " + e.what() + "]",
                      false, 0.0, {}};
            report.add({}, 0.0, std::numeric_limits<double>::infinity(),
                       std::numeric_limits<double>::infinity());
        }
        double scale = options_.tol_scale;
        if (jet_sensitive && options_.jets == JetMode::finite_difference)
            scale *= 100.0;
        report.tolerance *= scale;
        report.finalize();
        out_.push_back(std::move(report));
    }

private:
    const BatteryOptions& options_;
    std::vector<VerificationReport>& out_;
};

// --- forms -----------------------------------------------------------------

VerificationReport gaussian_curvature_grid(const std::string& name, const SurfacePatch& patch,
                                           double v_lo, double v_hi, double expected,
                                           double tolerance, bool relative, JetMode mode)
{
    VerificationReport report{name, false, tolerance, {}};
    for (double u : linspace(0.0, 2.0 * pi * 19.0 / 20.0, 20)) {
        for (double v : linspace(v_lo, v_hi, 20)) {
            const double K = gaussian_curvature(patch, u, v, mode);
            report.add({u, v}, expected, K, relative ? rel(expected, K) : std::abs(K - expected));
        }
    }
    report.finalize();
    return report;
}

VerificationReport orientation_invariance(const std::string& name, const SurfacePatch& patch,
                                          double v_lo, double v_hi, JetMode mode)
{
    const SurfacePatch flipped = patch.with_orientation(-patch.orientation_sign());
    VerificationReport report{name, false, 1e-12, {}};
    for (double u : linspace(0.0, 2.0 * pi * 9.0 / 10.0, 10)) {
        for (double v : linspace(v_lo, v_hi, 10)) {
            const double a = gaussian_curvature(patch, u, v, mode);
            const double b = gaussian_curvature(flipped, u, v, mode);
            report.add({u, v}, a, b, std::abs(a - b));
        }
    }
    report.finalize();
    return report;
}

VerificationReport regularity(const std::string& name, const SurfacePatch& patch, double v_lo,
                              double v_hi, JetMode mode)
{
    VerificationReport report{name, false, 0.0, {}};
    for (double u : linspace(0.0, 2.0 * pi * 9.0 / 10.0, 10)) {
        for (double v : linspace(v_lo, v_hi, 10)) {
            const Jet2 jet = eval_jet(patch, u, v, mode);
            const double area = norm(cross(jet.p_u, jet.p_v));
            report.add({u, v}, 1.0, area, sign_violation(area > 1e-12, area));
        }
    }
    report.finalize();
    return report;
}

VerificationReport jet_agreement(const std::string& name, const SurfacePatch& patch, double v_lo,
                                 double v_hi)
{
    VerificationReport report{name, false, 1e-6, {}};
    for (double u : linspace(0.0, 2.0 * pi * 9.0 / 10.0, 10)) {
        for (double v : linspace(v_lo, v_hi, 10)) {
            const Jet2 a = eval_jet(patch, u, v, JetMode::analytic);
            const Jet2 b = eval_jet(patch, u, v, JetMode::finite_difference);
            double worst = 0.0;
            double scale = 1.0;
            for (const auto& [x, y] : {std::pair{a.p_u, b.p_u}, std::pair{a.p_v, b.p_v},
                                       std::pair{a.p_uu, b.p_uu}, std::pair{a.p_uv, b.p_uv},
                                       std::pair{a.p_vv, b.p_vv}}) {
                worst = std::max(worst, norm(x - y));
                scale = std::max(scale, norm(x));
            }
            report.add({u, v}, 0.0, worst, worst / scale);
        }
    }
    report.finalize();
    return report;
}

void forms_suite(Runner& run)
{
    const JetMode mode = run.jets();
    for (double R : {0.5, 1.0, 2.0}) {
        run.run("gaussian_curvature/sphere R=" + fmt(R), true, [=] {
            return gaussian_curvature_grid("gaussian_curvature/sphere R=" + fmt(R), make_sphere(R),
                                           0.05, pi - 0.05, 1.0 / (R * R), 1e-6, true, mode);
        });
        run.run("gaussian_curvature/pseudosphere R=" + fmt(R), true, [=] {
            return gaussian_curvature_grid("gaussian_curvature/pseudosphere R=" + fmt(R),
                                           make_pseudosphere(R), 0.05, 1.5, -1.0 / (R * R), 1e-6,
                                           true, mode);
        });
    }
    run.run("gaussian_curvature/plane", true, [=] {
        return gaussian_curvature_grid("gaussian_curvature/plane", make_plane(), 0.1, 5.0, 0.0, 1e-8,
                                       false, mode);
    });

    const std::vector<std::tuple<std::string, SurfacePatch, double, double>> surfaces = {
        {"plane", make_plane(), 0.1, 5.0},
        {"sphere", make_sphere(1.0), 0.05, pi - 0.05},
        {"pseudosphere", make_pseudosphere(1.0), 0.05, 1.5},
    };
    for (const auto& [name, patch, lo, hi] : surfaces) {
        run.run("orientation_invariance/" + name, true,
                [&, lo = lo, hi = hi] { return orientation_invariance("orientation_invariance/" + name, patch, lo, hi, mode); });
        run.run("regularity/" + name, false,
                [&, lo = lo, hi = hi] { return regularity("regularity/" + name, patch, lo, hi, mode); });
        run.run("jet_agreement/" + name, false,
                [&, lo = lo, hi = hi] { return jet_agreement("jet_agreement/" + name, patch, lo, hi); });
    }
}

// --- curves ----------------------------------------------------------------

VerificationReport constant_angle(const std::string& name, const ChartCurve& curve,
                                  const std::vector<double>& ts, double expected, JetMode mode)
{
    VerificationReport report{name, false, 1e-7, {}};
    for (double t : ts) {
        const double angle = angle_to_parallel(curve, t, mode);
        report.add({t}, expected, angle, std::abs(std::remainder(angle - expected, 2.0 * pi)));
    }
    report.finalize();
    return report;
}

VerificationReport orientation_covariance(const std::string& name, const ChartCurve& curve,
                                          const std::vector<double>& ts, JetMode mode)
{
    const ChartCurve flipped_patch =
        curve.with_patch(curve.patch().with_orientation(-curve.patch().orientation_sign()));
    const ChartCurve flipped_curve = curve.with_direction(-curve.direction_sign());
    VerificationReport report{name, false, 1e-9, {}};
    for (double t : ts) {
        const double k = geodesic_curvature_numeric(curve, t, mode);
        const double kp = geodesic_curvature_numeric(flipped_patch, t, mode);
        const double kc = geodesic_curvature_numeric(flipped_curve, t, mode);
        report.add({t, 0.0}, -k, kp, std::abs(k + kp));
        report.add({t, 1.0}, -k, kc, std::abs(k + kc));
    }
    report.finalize();
    return report;
}

VerificationReport polar_trace_agreement(const std::string& name, const SurfacePatch& patch,
                                         const PolarSpiral& spiral, const ChartCurve& reference,
                                         const std::vector<double>& radii,
                                         const std::function<double(double)>& t_of_r)
{
    std::vector<PolarTracePoint> trace;
    for (double r : radii)
        trace.push_back(spiral_chart_trace(spiral, r));
    const std::vector<ChartPoint> chart = embed_polar_trace(patch, trace);
    VerificationReport report{name, false, 1e-9, {}};
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const Vec3 p = patch.point(chart[i].u, chart[i].v);
        const Vec3 q = reference.position(t_of_r(radii[i]));
        report.add({radii[i]}, 0.0, norm(p - q), norm(p - q));
    }
    report.finalize();
    return report;
}

void curves_suite(Runner& run)
{
    const JetMode mode = run.jets();

    for (double theta : {pi / 6, pi / 4, pi / 3, 2 * pi / 3}) {
        run.run("numeric_vs_closed_form/plane", true, [=] {
            auto r = verify_numeric_vs_closed_form(BuiltinSurface::plane, 1.0, theta, 50, mode);
            r.check_name += " theta=" + fmt(theta);
            return r;
        });
    }
    for (double R : {1.0, 2.0}) {
        for (double a : {0.5, 1.0, 2.0}) {
            run.run("numeric_vs_closed_form/sphere", true, [=] {
                auto r = verify_numeric_vs_closed_form(BuiltinSurface::sphere, R, std::atan2(1.0, a),
                                                       50, mode);
                r.check_name += " R=" + fmt(R) + " a=" + fmt(a);
                return r;
            });
        }
        for (double theta : {pi / 4, pi / 3, 2 * pi / 3}) {
            run.run("numeric_vs_closed_form/pseudosphere", true, [=] {
                auto r = verify_numeric_vs_closed_form(BuiltinSurface::pseudosphere, R, theta, 50, mode);
                r.check_name += " R=" + fmt(R) + " theta=" + fmt(theta);
                return r;
            });
        }
    }

    for (double a : {0.5, 1.0, 2.0}) {
        run.run("constant_angle/plane", false, [=] {
            return constant_angle("constant_angle/plane a=" + fmt(a), plane_log_spiral(a),
                                  linspace(-1.0, 3.0, 50), std::atan(a), mode);
        });
        run.run("constant_angle/sphere", false, [=] {
            return constant_angle("constant_angle/sphere a=" + fmt(a), sphere_loxodrome(1.0, a),
                                  linspace(0.1, 1.45, 50), -std::atan2(1.0, a), mode);
        });
    }
    for (double theta : {pi / 4, pi / 3, 2 * pi / 3}) {
        run.run("constant_angle/pseudosphere", false, [=] {
            return constant_angle("constant_angle/pseudosphere theta=" + fmt(theta),
                                  pseudosphere_loxodrome(1.0, theta, 0.0), linspace(0.05, 1.5, 50),
                                  theta, mode);
        });
    }
    for (double theta : {pi / 4, pi / 3}) {
        run.run("constant_angle/polar plane", false, [=] {
            const PolarSpiral s{0.0, theta, 1.0, 0.0};
            return constant_angle("constant_angle/polar plane theta=" + fmt(theta),
                                  embed_polar_spiral(make_plane(), s, 0.2, 5.0), linspace(0.25, 4.9, 50),
                                  -theta, mode);
        });
        run.run("constant_angle/polar sphere", false, [=] {
            const double R = 2.0;
            const PolarSpiral s{1.0 / (R * R), theta, 1.0, 0.0};
            return constant_angle("constant_angle/polar sphere theta=" + fmt(theta),
                                  embed_polar_spiral(make_sphere(R), s, 0.2, 5.8),
                                  linspace(0.25, 5.7, 50), -theta, mode);
        });
    }

    run.run("orientation_covariance/plane", true, [=] {
        return orientation_covariance("orientation_covariance/plane", plane_log_spiral(1.0),
                                      linspace(-1.0, 2.0, 10), mode);
    });
    run.run("orientation_covariance/sphere", true, [=] {
        return orientation_covariance("orientation_covariance/sphere", sphere_loxodrome(1.0, 1.0),
                                      linspace(0.1, 1.4, 10), mode);
    });
    run.run("orientation_covariance/pseudosphere", true, [=] {
        return orientation_covariance("orientation_covariance/pseudosphere",
                                      pseudosphere_loxodrome(1.0, pi / 3, 0.0), linspace(0.2, 1.4, 10),
                                      mode);
    });

    run.run("arc_length", false, [] {
        VerificationReport r{"arc_length", false, 1e-9, {}};
        for (double a : {0.5, 1.0, 2.0}) {
            const double T = 2.0;
            const double expected = std::sqrt(1.0 + a * a) / a * (1.0 - std::exp(-a * T));
            const double actual = arc_length(plane_log_spiral(a), 0.0, T);
            r.add({0.0, a, T}, expected, actual, rel(expected, actual));
        }
        for (double R : {1.0, 2.0}) {
            const double a = 1.0;
            const double expected = 2.0 * R * std::sqrt(1.0 + a * a) * (1.2 - 0.2);
            const double actual = arc_length(sphere_loxodrome(R, a), 0.2, 1.2);
            r.add({1.0, a, R}, expected, actual, rel(expected, actual));
            const double v0 = 0.1;
            const double mexpected = -R * std::log(std::sin(v0));
            const double mactual =
                arc_length(coordinate_curve(make_pseudosphere(R), CoordinateCurve::meridian, 0.0), v0,
                           pi / 2);
            r.add({2.0, v0, R}, mexpected, mactual, rel(mexpected, mactual));
        }
        r.finalize();
        return r;
    });

    run.run("polar_trace/sphere", false, [] {
        const double R = 2.0;
        const double theta = pi / 3;
        const double a = 1.0 / std::tan(theta);
        const double r0 = 1.0;
        const PolarSpiral s{1.0 / (R * R), theta, r0, a * std::log(std::tan(r0 / (2.0 * R)))};
        return polar_trace_agreement("polar_trace/sphere vs loxodrome", make_sphere(R), s,
                                     sphere_loxodrome(R, a), linspace(0.3, 5.9, 40),
                                     [R](double r) { return r / (2.0 * R); });
    });
    run.run("polar_trace/plane", false, [] {
        const double theta = pi / 4;
        const double a = -std::tan(theta);
        const double r0 = 1.5;
        const PolarSpiral s{0.0, theta, r0, std::log(r0) / std::tan(theta)};
        return polar_trace_agreement("polar_trace/plane vs log spiral", make_plane(), s,
                                     plane_log_spiral(a), linspace(0.1, 8.0, 40),
                                     [a](double r) { return -std::log(r) / a; });
    });
}

// --- liouville -------------------------------------------------------------

struct LiouvilleCase {
    std::string name;
    ChartCurve curve;
    std::vector<double> ts;
    bool constant_angle;
};

void liouville_suite(Runner& run)
{
    const JetMode mode = run.jets();
    std::vector<LiouvilleCase> cases;
    for (double a : {0.5, 1.0, 2.0})
        cases.push_back({"plane spiral a=" + fmt(a), plane_log_spiral(a),
                         linspace(-1.0 / a, 1.0 / a, 10), true});
    for (double R : {1.0, 2.0})
        for (double a : {0.5, 1.0, 2.0})
            cases.push_back({"sphere loxodrome R=" + fmt(R) + " a=" + fmt(a), sphere_loxodrome(R, a),
                             linspace(0.1, 1.45, 10), true});
    for (double R : {1.0, 2.0})
        for (double theta : {pi / 4, pi / 3, 2 * pi / 3})
            cases.push_back({"pseudosphere loxodrome R=" + fmt(R) + " theta=" + fmt(theta),
                             pseudosphere_loxodrome(R, theta, 0.0), linspace(0.2, 1.4, 10), true});
    cases.push_back({"plane circle r=2", coordinate_curve(make_plane(), CoordinateCurve::parallel, 2.0),
                     linspace(0.0, 6.0, 10), true});
    cases.push_back({"sphere parallel v=1",
                     coordinate_curve(make_sphere(1.5), CoordinateCurve::parallel, 1.0),
                     linspace(0.0, 6.0, 10), true});
    cases.push_back({"pseudosphere parallel v=0.7",
                     coordinate_curve(make_pseudosphere(1.0), CoordinateCurve::parallel, 0.7),
                     linspace(0.0, 6.0, 10), true});
    cases.push_back({"sphere meridian reversed",
                     coordinate_curve(make_sphere(1.0), CoordinateCurve::meridian, 0.5, -1),
                     linspace(0.2, 2.9, 10), true});

    for (const LiouvilleCase& c : cases) {
        run.run("liouville_residual/" + c.name, true, [&c, mode] {
            VerificationReport r{"liouville_residual/" + c.name, false, 1e-5, {}};
            for (double t : c.ts) {
                const LiouvilleBreakdown b = liouville_breakdown(c.curve, t, mode);
                r.add({t, b.k1, b.k2, b.theta, b.dtheta_ds}, b.k_direct, b.k_liouville, b.residual);
            }
            r.finalize();
            return r;
        });
        if (c.constant_angle) {
            run.run("angle_derivative/" + c.name, true, [&c, mode] {
                VerificationReport r{"angle_derivative/" + c.name, false, 1e-7, {}};
                for (double t : c.ts) {
                    const LiouvilleBreakdown b = liouville_breakdown(c.curve, t, mode);
                    r.add({t}, 0.0, b.dtheta_ds, std::abs(b.dtheta_ds));
                }
                r.finalize();
                return r;
            });
        }
    }

    const std::vector<std::tuple<std::string, SurfacePatch, double, double>> meridians = {
        {"plane", make_plane(), 0.2, 5.0},
        {"sphere", make_sphere(1.0), 0.1, pi - 0.1},
        {"pseudosphere", make_pseudosphere(1.0), 0.05, 1.5},
    };
    for (const auto& [name, patch, lo, hi] : meridians) {
        run.run("meridian_geodesic/" + name, true, [&, lo = lo, hi = hi] {
            VerificationReport r{"meridian_geodesic/" + name, false, 1e-8, {}};
            for (double u : {0.0, 1.0, 2.5}) {
                const ChartCurve m = coordinate_curve(patch, CoordinateCurve::meridian, u);
                for (double v : linspace(lo, hi, 10)) {
                    const double k = geodesic_curvature_numeric(m, v, mode);
                    r.add({u, v}, 0.0, k, std::abs(k));
                }
            }
            r.finalize();
            return r;
        });
    }

    for (double R : {1.0, 2.0}) {
        run.run("pseudosphere_parallel_k1", true, [R, mode] {
            VerificationReport r{"pseudosphere_parallel_k1 R=" + fmt(R), false, 1e-6, {}};
            const SurfacePatch patch = make_pseudosphere(R);
            for (double v : linspace(0.1, 1.4, 10)) {
                const ChartCurve c = coordinate_curve(patch, CoordinateCurve::parallel, v);
                const double k = geodesic_curvature_numeric(c, 0.3, mode);
                r.add({v}, -1.0 / R, k, rel(-1.0 / R, k));
            }
            r.finalize();
            return r;
        });
    }
}

// --- analysis --------------------------------------------------------------

VerificationReport slope_report(double K, double K2, double theta)
{
    const std::vector<double> rs = {1e-1, 1e-2, 1e-3, 1e-4};
    const VerificationReport ratio = verify_ratio_limit(K, K2, theta, rs);
    const double slope = convergence_slope(ratio);
    VerificationReport r{"ratio_convergence_slope K=" + fmt(K) + " K'=" + fmt(K2), false, 0.1, {}};
    r.add({K, K2, theta}, 2.0, slope, std::abs(slope - 2.0));
    r.finalize();
    return r;
}

void analysis_suite(Runner& run)
{
    const std::vector<double> rs = {1e-1, 1e-2, 1e-3, 1e-4};
    for (const auto& [K, K2] : {std::pair{4.0, -4.0}, std::pair{1.0, 0.0}, std::pair{1.0, 1.0}}) {
        run.run("ratio_limit", false, [&, K = K, K2 = K2] {
            auto r = verify_ratio_limit(K, K2, pi / 3, rs);
            r.check_name += " K=" + fmt(K) + " K'=" + fmt(K2);
            return r;
        });
    }
    run.run("ratio_convergence_slope", false, [] { return slope_report(4.0, -4.0, pi / 3); });
    run.run("ratio_convergence_slope", false, [] { return slope_report(1.0, 0.0, pi / 4); });

    const std::vector<double> hs = {1e-3, 5e-4, 2.5e-4};
    for (double r : {0.5, 1.0, 3.0}) {
        for (double theta : {pi / 6, pi / 3, pi / 2, 3 * pi / 4}) {
            run.run("derivative_at_zero", false, [&, r, theta] {
                auto rep = verify_derivative_at_zero(r, theta, hs);
                rep.check_name += " r=" + fmt(r) + " theta=" + fmt(theta);
                return rep;
            });
        }
    }

    run.run("f_monotone", false, [] {
        VerificationReport all{"f_monotone", false, 0.0, {}};
        for (double r : {0.25, 1.0, 4.0}) {
            const double t_hi = std::pow(pi / r - 1e-3, 2);
            const VerificationReport part = verify_f_monotone(r, linspace(-25.0, t_hi, 1000));
            all.observations.insert(all.observations.end(), part.observations.begin(),
                                    part.observations.end());
        }
        all.finalize();
        return all;
    });
    run.run("f_prime_at_zero", false, [] {
        VerificationReport r{"f_prime_at_zero", false, 0.0, {}};
        for (double x : {0.1, 0.5, 1.0, 2.0, 3.0, 10.0}) {
            const double d = f_prime(0.0, x);
            r.add({x}, -x / 3.0, d, std::abs(d + x / 3.0));
        }
        r.finalize();
        return r;
    });

    for (double K : {-4.0, 0.0, 4.0}) {
        run.run("sign_theorem", false, [K] {
            const std::vector<double> thetas = {pi / 6, pi / 3, pi / 2, 2 * pi / 3};
            auto r = verify_sign_theorem(K, thetas, 1e-2);
            r.check_name += " K=" + fmt(K);
            return r;
        });
    }

    run.run("seam_agreement", false, [] {
        const std::vector<double> radii = {0.5, 1.0, 2.0, 3.0};
        return verify_seam_agreement(radii);
    });
    for (double r : {0.5, 1.0, 3.0}) {
        for (double theta : {pi / 6, pi / 3, 3 * pi / 4}) {
            run.run("seam_continuity", false, [r, theta] {
                auto rep = verify_seam_continuity(r, theta);
                rep.check_name += " r=" + fmt(r) + " theta=" + fmt(theta);
                return rep;
            });
        }
    }

    for (double K : {-4.0, -1.0, 0.0, 1.0, 4.0}) {
        run.run("jacobi_equation", false, [K] {
            auto r = verify_jacobi_equation(K);
            r.check_name += " K=" + fmt(K);
            return r;
        });
        run.run("polar_limits", false, [K] {
            auto r = verify_polar_limits(K);
            r.check_name += " K=" + fmt(K);
            return r;
        });
        run.run("circle_curvature", false, [K] {
            auto r = verify_circle_curvature(K);
            r.check_name += " K=" + fmt(K);
            return r;
        });
    }
}

} // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept
{
    for (Suite s : {Suite::forms, Suite::curves, Suite::liouville, Suite::analysis, Suite::all})
        if (name == to_string(s))
            return s;
    return std::nullopt;
}

std::string_view to_string(Suite suite) noexcept
{
    switch (suite) {
    case Suite::forms: return "forms";
    case Suite::curves: return "curves";
    case Suite::liouville: return "liouville";
    case Suite::analysis: return "analysis";
    case Suite::all: return "all";
    }
    return "unknown";
}

std::vector<VerificationReport> run_battery(Suite suite, const BatteryOptions& options)
{
    if (!(options.tol_scale > 0.0) || !std::isfinite(options.tol_scale))
        raise(ErrorKind::BadParameter, "tolerance scale must be positive and finite");
    std::vector<VerificationReport> reports;
    Runner run(options, reports);
    const bool all = suite == Suite::all;
    if (all || suite == Suite::forms)
        forms_suite(run);
    if (all || suite == Suite::curves)
        curves_suite(run);
    if (all || suite == Suite::liouville)
        liouville_suite(run);
    if (all || suite == Suite::analysis)
        analysis_suite(run);
    return reports;
}

} // namespace logspiral
