#include "logspiral/analysis.hpp"

#include "logspiral/closed_form.hpp"
#include "logspiral/curves.hpp"
#include "logspiral/errors.hpp"
#include "logspiral/geodesic_polar.hpp"
#include "logspiral/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace logspiral {

namespace {

constexpr double kRatioSafety = 1.5;

double relative_error(double expected, double actual)
{
    const double diff = std::abs(actual - expected);
    return expected == 0.0 ? diff : diff / std::abs(expected);
}

int sign_of(double x) noexcept { return (x > 0.0) - (x < 0.0); }

void require_strictly_decreasing_positive(std::span<const double> xs, const char* what)
{
    if (xs.empty())
        raise(ErrorKind::BadParameter, std::string(what) + " must not be empty");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0))
            raise(ErrorKind::DomainError, std::string(what) + " must be positive");
        if (i > 0 && !(xs[i] < xs[i - 1]))
            raise(ErrorKind::BadParameter, std::string(what) + " must be strictly decreasing");
    }
}

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    return xs;
}

std::string surface_name(BuiltinSurface s)
{
    switch (s) {
    case BuiltinSurface::plane: return "plane";
    case BuiltinSurface::sphere: return "sphere";
    case BuiltinSurface::pseudosphere: return "pseudosphere";
    }
    return "unknown";
}

} // namespace

void VerificationReport::add(std::vector<double> input, double expected, double actual,
                             double error)
{
    observations.push_back({std::move(input), expected, actual, error});
}

void VerificationReport::finalize()
{
    passed = std::all_of(observations.begin(), observations.end(),
                         [this](const Observation& o) { return o.error <= tolerance; });
}

double VerificationReport::max_error() const noexcept
{
    double worst = 0.0;
    for (const Observation& o : observations)
        worst = std::max(worst, o.error);
    return worst;
}

double sign_violation(bool holds, double actual) noexcept
{
    return holds ? 0.0 : 1.0 + std::abs(actual);
}

VerificationReport verify_ratio_limit(double K, double K2, double theta,
                                      std::span<const double> r_sequence)
{
    require_strictly_decreasing_positive(r_sequence, "r sequence");
    if (characteristic_cosine(theta) == 0.0)
        raise(ErrorKind::DomainError, "the curvature ratio is undefined when cos(theta) = 0");

    VerificationReport report{"ratio_limit", false, 1.0, {}};
    for (double r : r_sequence) {
        const double ratio = k_theta(K, r, theta) / k_theta(K2, r, theta);
        const double deviation = std::abs(ratio - 1.0);
        const double envelope = std::abs(K - K2) * r * r / 3.0 * kRatioSafety;
        report.add({K, K2, theta, r}, 1.0, ratio, envelope > 0.0 ? deviation / envelope : deviation);
    }
    report.finalize();
    return report;
}

double convergence_slope(const VerificationReport& report, std::size_t index)
{
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    double n = 0.0;
    for (const Observation& o : report.observations) {
        const double dev = std::abs(o.actual - o.expected);
        if (index >= o.input.size() || !(dev > 0.0) || !(o.input[index] > 0.0))
            continue;
        const double x = std::log(o.input[index]);
        const double y = std::log(dev);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        n += 1.0;
    }
    if (n < 2.0)
        raise(ErrorKind::PreconditionFailed, "slope needs at least two nonzero deviations");
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

VerificationReport verify_derivative_at_zero(double r, double theta,
                                             std::span<const double> h_sequence)
{
    require_strictly_decreasing_positive(h_sequence, "h sequence");
    if (h_sequence.size() < 2)
        raise(ErrorKind::BadParameter, "Richardson extrapolation needs two step sizes");

    const double target = -(r / 3.0) * characteristic_cosine(theta);
    std::vector<double> central;
    central.reserve(h_sequence.size());
    for (double h : h_sequence)
        central.push_back((k_theta(h, r, theta) - k_theta(-h, r, theta)) / (2.0 * h));

    VerificationReport report{"derivative_at_zero", false, 1e-8, {}};
    for (std::size_t i = 0; i + 1 < h_sequence.size(); ++i) {
        const double q = h_sequence[i] / h_sequence[i + 1];
        const double extrapolated = central[i + 1] + (central[i + 1] - central[i]) / (q * q - 1.0);
        report.add({r, theta, h_sequence[i], h_sequence[i + 1]}, target, extrapolated,
                   relative_error(target, extrapolated));
    }
    report.finalize();
    return report;
}

VerificationReport verify_f_monotone(double r, std::span<const double> t_grid)
{
    if (t_grid.empty())
        raise(ErrorKind::BadParameter, "t grid must not be empty");
    VerificationReport report{"f_monotone", false, 0.0, {}};
    double previous_t = 0.0;
    double previous_f = 0.0;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        const double slope = f_prime(t, r);
        const double value = f(t, r);
        report.add({t, r}, 0.0, slope, sign_violation(slope < 0.0, slope));
        if (i > 0) {
            if (!(t > previous_t))
                raise(ErrorKind::BadParameter, "t grid must be strictly increasing");
            report.add({previous_t, t, r}, previous_f, value,
                       sign_violation(value < previous_f, value - previous_f));
        }
        previous_t = t;
        previous_f = value;
    }
    report.finalize();
    return report;
}

VerificationReport verify_sign_theorem(double K, std::span<const double> theta_grid, double r)
{
    if (!(r > 0.0) || !(r < first_zero_of_f(K)) || !(f(K, r) > 0.0))
        raise(ErrorKind::PreconditionFailed,
              "r must lie below the first zero of f so that the geodesic circle has f > 0");

    VerificationReport report{"sign_theorem", false, 1e-12, {}};
    const double h = 1e-3 * std::max(1.0, std::abs(K));
    for (double theta : theta_grid) {
        const int expected_sign = sign_of(characteristic_cosine(theta));
        const double k = k_theta(K, r, theta);
        report.add({K, r, theta, 0.0}, expected_sign, k, sign_violation(sign_of(k) == expected_sign, k));

        const double analytic = d_abs_k_dK(K, r, theta);
        const auto abs_k = [&](double kk) { return std::abs(k_theta(kk, r, theta)); };
        const double numeric = numerics::richardson_first<double>(abs_k, K, h).value;

        for (const auto& [tag, value] : {std::pair{1.0, analytic}, std::pair{2.0, numeric}}) {
            const double error =
                expected_sign == 0 ? std::abs(value) : sign_violation(value < 0.0, value);
            report.add({K, r, theta, tag}, 0.0, value, error);
        }
    }
    report.finalize();
    report.check_name += " (r < " + std::to_string(first_zero_of_f(K)) + ")";
    return report;
}

VerificationReport verify_numeric_vs_closed_form(BuiltinSurface surface, double R, double theta,
                                                 int sample_count, JetMode mode, double tolerance)
{
    if (sample_count < 1)
        raise(ErrorKind::BadParameter, "need at least one sample");
    const double cos_theta = characteristic_cosine(theta);
    VerificationReport report{"numeric_vs_closed_form/" + surface_name(surface), false, tolerance, {}};

    switch (surface) {
    case BuiltinSurface::plane: {
        // theta in (pi/2, pi) is the reversed spiral with a = tan(theta) < 0.
        const double a = std::tan(theta);
        const ChartCurve curve = plane_log_spiral(a, theta < std::numbers::pi / 2 ? 1 : -1);
        for (double log_r : linspace(std::log(0.2), std::log(5.0), sample_count)) {
            const double t = -log_r / a;
            const double r = std::exp(-a * t);
            const double k = geodesic_curvature_numeric(curve, t, mode);
            const double expected = cos_theta / r;
            report.add({R, theta, t, r}, expected, k, relative_error(expected, k));
        }
        break;
    }
    case BuiltinSurface::sphere: {
        const double a = cos_theta / std::sin(theta);
        const ChartCurve curve = sphere_loxodrome(R, a);
        for (double v : linspace(0.15, 1.35, sample_count)) {
            const double t = v / 2.0;
            const double r = R * v;
            const double k = geodesic_curvature_numeric(curve, t, mode);
            const double expected = std::cos(r / R) / std::sin(r / R) / R * cos_theta;
            report.add({R, theta, t, r}, expected, k, relative_error(expected, k));
        }
        break;
    }
    case BuiltinSurface::pseudosphere: {
        const ChartCurve curve = pseudosphere_loxodrome(R, theta, 0.0);
        const double expected = -cos_theta / R;
        for (double v : linspace(0.2, 1.4, sample_count)) {
            const double k = geodesic_curvature_numeric(curve, v, mode);
            report.add({R, theta, v, v}, expected, k, std::abs(k - expected));
        }
        break;
    }
    }
    report.finalize();
    return report;
}

VerificationReport verify_seam_agreement(std::span<const double> r_values, int ring_samples,
                                         double tolerance)
{
    VerificationReport report{"seam_agreement", false, tolerance, {}};
    for (double r : r_values) {
        for (double z : linspace(0.9e-4, 1.1e-4, ring_samples)) {
            for (double sign : {1.0, -1.0}) {
                const double K = sign * z / (r * r);
                const double direct = f_direct(K, r);
                const double series = f_series(K, r, 4);
                report.add({K, r}, series, direct, relative_error(series, direct));
            }
        }
    }
    report.finalize();
    return report;
}

VerificationReport verify_seam_continuity(double r, double theta, double tolerance)
{
    VerificationReport report{"seam_continuity", false, tolerance, {}};
    const double at_zero = k_theta(0.0, r, theta);
    double previous = std::numeric_limits<double>::infinity();
    for (double h : {1e-2, 1e-4, 1e-6}) {
        const double gap = std::max(std::abs(k_theta(h, r, theta) - at_zero),
                                    std::abs(k_theta(-h, r, theta) - at_zero));
        report.add({r, theta, h}, at_zero, gap, sign_violation(gap < previous || gap == 0.0, gap));
        previous = gap;
    }
    const double delta = 1e-15;
    const double jump = std::max(std::abs(k_theta(delta, r, theta) - at_zero),
                                 std::abs(k_theta(-delta, r, theta) - at_zero));
    report.add({r, theta, delta}, at_zero, jump, jump);
    report.finalize();
    return report;
}

VerificationReport verify_jacobi_equation(double K, int samples, double tolerance)
{
    const PolarMetric metric = polar_metric(K);
    const double r_hi = K > 0.0 ? 0.9 * max_radius(K) : 2.0;
    VerificationReport report{"jacobi_equation", false, tolerance, {}};
    for (double r : linspace(0.02 * r_hi, r_hi, samples)) {
        const double h = std::min(std::pow(numerics::kEpsilon, 1.0 / 6.0) * std::max(1.0, r), 0.5 * r);
        const auto sqrt_g = [&](double s) { return metric.sqrt_g(s); };
        const double value = metric.sqrt_g(r);
        const double second = numerics::richardson_second<double>(sqrt_g, r, h, value).value;
        const double residual = second + K * value;
        report.add({K, r}, 0.0, residual, std::abs(residual));
    }
    report.finalize();
    return report;
}

VerificationReport verify_polar_limits(double K)
{
    const PolarMetric metric = polar_metric(K);
    VerificationReport report{"polar_limits", false, 1e-6, {}};
    const double r = 1e-8;
    const double value = metric.sqrt_g(r);
    report.add({K, r, 0.0}, 0.0, value, value < 1e-7 ? 0.0 : 1.0 + value);
    const double h = 1e-9;
    const double slope = (metric.sqrt_g(r + h) - metric.sqrt_g(r - h)) / (2.0 * h);
    report.add({K, r, 1.0}, 1.0, slope, std::abs(slope - 1.0));
    report.finalize();
    return report;
}

VerificationReport verify_circle_curvature(double K, int samples, double tolerance)
{
    const double r_hi = K > 0.0 ? 0.99 * max_radius(K) : 5.0;
    VerificationReport report{"circle_curvature_matches_f", false, tolerance, {}};
    for (double r : linspace(r_hi / samples, r_hi, samples)) {
        const double expected = f(K, r);
        const double actual = circle_curvature(K, r);
        report.add({K, r}, expected, actual, relative_error(expected, actual));
    }
    report.finalize();
    return report;
}

} // namespace logspiral
