#include "cli.hpp"

#include "figures.hpp"

#include "logspiral/battery.hpp"
#include "logspiral/closed_form.hpp"
#include "logspiral/curves.hpp"
#include "logspiral/errors.hpp"
#include "logspiral/geodesic_polar.hpp"
#include "logspiral/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace logspiral::cli {

namespace {

constexpr double pi = std::numbers::pi;

std::string g17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Angle {
    std::optional<double> rad;
    std::optional<double> deg;

    void bind(CLI::App* cmd)
    {
        auto* r = cmd->add_option("--theta", rad, "characteristic angle in radians");
        auto* d = cmd->add_option("--theta-deg", deg, "characteristic angle in degrees");
        r->excludes(d);
    }

    [[nodiscard]] double value() const
    {
        if (rad)
            return *rad;
        if (deg)
            return *deg * pi / 180.0;
        throw FlagError("one of --theta or --theta-deg is required");
    }
};

/// Writes to `path` ("-" or empty means `out`); nothing is created on failure upstream
/// because callers build the full text first.
void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush())
        throw IoError("cannot write " + path);
}

// --- curvature -------------------------------------------------------------

struct CurvatureArgs {
    double K = 0.0;
    double r = 0.0;
    Angle theta;
};

int cmd_curvature(const CurvatureArgs& a, std::ostream& out)
{
    const double k = k_theta(a.K, a.r, a.theta.value());
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.17g", k);
    out << buf << '\n';
    return ok;
}

// --- profile ---------------------------------------------------------------

struct ProfileArgs {
    std::string axis = "r";
    double fixed = 0.0;
    double min = 0.0;
    double max = 1.0;
    int steps = 0;
    Angle theta;
    std::string out;
};

int cmd_profile(const ProfileArgs& a, std::ostream& out)
{
    const CurvatureProfile p = sweep_profile(a.axis == "r" ? ProfileAxis::r : ProfileAxis::K, a.fixed,
                                             a.min, a.max, a.steps, a.theta.value());
    std::string text = "x,k,method\n";
    for (const ProfileSample& s : p.samples)
        text += g17(s.x) + ',' + g17(s.k) + ',' + std::string(to_string(s.method)) + '\n';
    emit(a.out, text, out);
    return ok;
}

// --- trace -----------------------------------------------------------------

struct TraceArgs {
    std::string surface = "plane";
    std::optional<double> K;
    double R = 1.0;
    Angle theta;
    double r0 = 0.1;
    double r1 = 2.0;
    int samples = 200;
    std::string format = "csv";
    std::string out;
};

struct TraceRow {
    double t, u, v, k, theta_meas;
    Vec3 p;
};

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    return xs;
}

std::vector<TraceRow> sample_rows(const ChartCurve& curve, const std::vector<double>& ts)
{
    std::vector<TraceRow> rows;
    for (double t : ts) {
        if (!curve.t_domain().interior(t))
            raise(ErrorKind::DomainError, "trace range must lie strictly inside the curve's domain");
        const ChartPoint cp = curve.at(t);
        const CurveSample s = sample_curve(curve, t);
        rows.push_back({t, cp.u, cp.v, s.k, s.theta, s.position});
    }
    return rows;
}

void check_range(double r0, double r1)
{
    if (!(r0 < r1) || !std::isfinite(r0) || !std::isfinite(r1))
        throw FlagError("--r0 must be smaller than --r1");
}

std::vector<TraceRow> trace_rows(const TraceArgs& a)
{
    const double theta = a.theta.value();
    check_range(a.r0, a.r1);
    if (!(theta > 0.0 && theta < pi))
        raise(ErrorKind::DomainError, "theta must lie in (0, pi)");
    if (a.surface != "polar" && a.K)
        throw FlagError("--K only applies to --surface polar");
    if (a.surface != "polar" && a.surface != "plane" && !(a.R > 0.0 && std::isfinite(a.R)))
        raise(ErrorKind::DomainError, "R must be positive");

    if (a.surface == "plane") {
        if (!(a.r0 > 0.0))
            raise(ErrorKind::DomainError, "plane radii must be positive");
        const double cos_t = characteristic_cosine(theta);
        if (cos_t == 0.0)
            raise(ErrorKind::DomainError, "a plane spiral with theta = pi/2 degenerates to a ray");
        const double slope = std::sin(theta) / cos_t;
        const ChartCurve c = plane_log_spiral(slope, theta < pi / 2 ? 1 : -1);
        return sample_rows(c, linspace(-std::log(a.r0) / slope, -std::log(a.r1) / slope, a.samples));
    }
    if (a.surface == "sphere") {
        const double cot = characteristic_cosine(theta) / std::sin(theta);
        if (cot == 0.0) {
            const ChartCurve m = coordinate_curve(make_sphere(a.R), CoordinateCurve::meridian, 0.0);
            return sample_rows(m, linspace(a.r0 / a.R, a.r1 / a.R, a.samples));
        }
        const ChartCurve c = sphere_loxodrome(a.R, cot);
        return sample_rows(c, linspace(a.r0 / (2.0 * a.R), a.r1 / (2.0 * a.R), a.samples));
    }
    if (a.surface == "pseudosphere") {
        // r0, r1 are meridian distances from the rim v = pi/2.
        if (!(a.r0 >= 0.0))
            raise(ErrorKind::DomainError, "distance from the rim must be non-negative");
        const ChartCurve c = pseudosphere_loxodrome(a.R, theta, 0.0);
        std::vector<double> ts;
        for (double s : linspace(a.r0, a.r1, a.samples))
            ts.push_back(std::asin(std::exp(-s / a.R)));
        return sample_rows(c, ts);
    }

    // polar: intrinsic trace, drawn in the tangent plane as (r cos u, r sin u).
    const double K = a.K.value_or(0.0);
    const PolarSpiral spiral{K, theta, a.r0, 0.0};
    const PolarMetric metric = polar_metric(K);
    const double cot = characteristic_cosine(theta) / std::sin(theta);
    std::vector<TraceRow> rows;
    for (double r : linspace(a.r0, a.r1, a.samples)) {
        const PolarTracePoint p = spiral_chart_trace(spiral, r);
        const double sg = metric.sqrt_g(r);
        const double du_dr = cot / sg;
        // Outward tangent (du, dr) = (du_dr, 1) against the circle direction, measured in
        // dr^2 + G du^2; the orientation convention makes the angle negative.
        const double measured = std::atan2(-1.0, sg * du_dr);
        rows.push_back({r, p.u, r, k_theta(K, r, theta), measured,
                        Vec3{r * std::cos(p.u), r * std::sin(p.u), 0.0}});
    }
    return rows;
}

int cmd_trace(const TraceArgs& a, std::ostream& out)
{
    const std::vector<TraceRow> rows = trace_rows(a);
    std::string text;
    if (a.format == "csv") {
        text = "t,x,y,z,u,v,k,theta_meas\n";
        for (const TraceRow& r : rows) {
            for (double x : {r.t, r.p.x, r.p.y, r.p.z, r.u, r.v, r.k})
                text += g17(x) + ',';
            text += g17(r.theta_meas) + '\n';
        }
    } else {
        std::vector<Vec3> pts;
        for (const TraceRow& r : rows)
            pts.push_back(r.p);
        text = figures::render_curve(pts, a.surface, a.R, "trace on " + a.surface);
    }
    emit(a.out, text, out);
    return ok;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::string jets = "analytic";
    double tol_scale = 1.0;
    std::string format = "text";
    std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    const std::optional<Suite> suite = parse_suite(a.suite);
    if (!suite)
        throw FlagError("unknown suite " + a.suite);
    BatteryOptions opts;
    opts.jets = a.jets == "fd" ? JetMode::finite_difference : JetMode::analytic;
    opts.tol_scale = a.tol_scale;
    const std::vector<VerificationReport> reports = run_battery(*suite, opts);

    std::string text;
    if (a.format == "json") {
        text = to_json(reports);
    } else {
        std::ostringstream os;
        write_text(os, reports);
        const auto failed = std::count_if(reports.begin(), reports.end(),
                                          [](const VerificationReport& r) { return !r.passed; });
        os << (failed ? "FAILED " : "OK ") << reports.size() - static_cast<std::size_t>(failed) << '/'
           << reports.size() << " checks passed\n";
        text = os.str();
    }
    emit(a.out, text, out);
    return all_passed(reports) ? ok : verify_failed;
}

// --- figure ----------------------------------------------------------------

struct FigureArgs {
    std::string name;
    std::string out;
};

int cmd_figure(const FigureArgs& a, std::ostream& out)
{
    emit(a.out, figures::render(a.name), out);
    return ok;
}

std::vector<std::string> figure_names()
{
    return {std::begin(figures::kNames), std::end(figures::kNames)};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"spiral and loxodrome curvature on constant-curvature surfaces", "logspiral"};
    app.require_subcommand(1);

    CurvatureArgs ca;
    auto* curvature = app.add_subcommand("curvature", "evaluate k_theta(K, r)");
    curvature->add_option("--K", ca.K, "Gaussian curvature")->required();
    curvature->add_option("--r", ca.r, "geodesic distance to the center")->required();
    ca.theta.bind(curvature);

    ProfileArgs pa;
    auto* profile = app.add_subcommand("profile", "sweep k_theta along r or K as CSV");
    profile->add_option("--axis", pa.axis)->check(CLI::IsMember({"r", "K"}));
    profile->add_option("--fixed", pa.fixed, "value of the other coordinate")->required();
    profile->add_option("--min", pa.min)->required();
    profile->add_option("--max", pa.max)->required();
    profile->add_option("--steps", pa.steps)->required()->check(CLI::Range(2, 10'000'000));
    pa.theta.bind(profile);
    profile->add_option("--out", pa.out, "output path, - for stdout");

    TraceArgs ta;
    auto* trace = app.add_subcommand("trace", "sample a spiral or loxodrome as CSV or SVG");
    trace->add_option("--surface", ta.surface)
        ->check(CLI::IsMember({"plane", "sphere", "pseudosphere", "polar"}));
    trace->add_option("--K", ta.K, "curvature for --surface polar");
    trace->add_option("--R", ta.R, "sphere / pseudosphere radius");
    ta.theta.bind(trace);
    trace->add_option("--r0", ta.r0, "start distance (pseudosphere: from the rim)");
    trace->add_option("--r1", ta.r1, "end distance");
    trace->add_option("--samples", ta.samples)->check(CLI::Range(2, 10'000'000));
    trace->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "svg"}));
    trace->add_option("--out", ta.out, "output path, - for stdout");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("--suite", va.suite)
        ->check(CLI::IsMember({"forms", "curves", "liouville", "analysis", "all"}));
    verify->add_option("--jets", va.jets)->check(CLI::IsMember({"analytic", "fd"}));
    verify->add_option("--tol-scale", va.tol_scale)->check(CLI::PositiveNumber);
    verify->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", va.out, "output path, - for stdout");

    FigureArgs fa;
    auto* figure = app.add_subcommand("figure", "write one of the reference figures as SVG");
    figure->add_option("--name", fa.name)->required()->check(CLI::IsMember(figure_names()));
    figure->add_option("--out", fa.out, "output path, - for stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_flags;
    }

    try {
        if (*curvature)
            return cmd_curvature(ca, out);
        if (*profile)
            return cmd_profile(pa, out);
        if (*trace)
            return cmd_trace(ta, out);
        if (*verify)
            return cmd_verify(va, out);
        return cmd_figure(fa, out);
    } catch (const FlagError& e) {
        err << "error: " << e.what() << '\n';
        return bad_flags;
    } catch (const GeometryError& e) {
        err << "domain error: " << e.what() << '\n';
        return domain_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
}

} // namespace logspiral::cli
