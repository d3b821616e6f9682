#pragma once

#include "logspiral/surface.hpp"

#include <span>
#include <string>
#include <vector>

// Executable checks of the analytic properties of k_theta(K, r): the small-r
// ratio limit, the K-derivative at the flat seam, monotonicity of f, the sign
// of d|k|/dK, and agreement of numerically measured curvature with the closed
// forms on the built-in surfaces.
namespace logspiral {

struct Observation {
    std::vector<double> input;
    double expected = 0.0;
    double actual = 0.0;
    double error = 0.0;
};

/// passed is true exactly when every observation's error is <= tolerance.
///
/// Sign checks (f' < 0, d|k|/dK < 0, ...) record error 0 when the sign holds
/// and 1 + |actual| when it does not, and use tolerance 0.
struct VerificationReport {
    std::string check_name;
    bool passed = false;
    double tolerance = 0.0;
    std::vector<Observation> observations;

    void add(std::vector<double> input, double expected, double actual, double error);
    /// Recomputes `passed` from the observations.
    void finalize();
    [[nodiscard]] double max_error() const noexcept;
};

/// error = 0 when `holds`, otherwise 1 + |actual|.
[[nodiscard]] double sign_violation(bool holds, double actual) noexcept;

/// |k(K, r) / k(K2, r) - 1| against the envelope |K - K2| r^2 / 3 * 1.5 at each
/// r. Observations record the ratio; error is |ratio - 1| divided by the
/// envelope (tolerance 1), or |ratio - 1| itself when K == K2.
[[nodiscard]] VerificationReport verify_ratio_limit(double K, double K2, double theta,
                                                    std::span<const double> r_sequence);

/// Least-squares slope of log|actual - expected| against log(input[index]).
[[nodiscard]] double convergence_slope(const VerificationReport& report, std::size_t index = 3);

/// Richardson-extrapolated central differences (k(h) - k(-h)) / 2h for each
/// consecutive pair of h against -(r/3) cos(theta), relative tolerance 1e-8.
[[nodiscard]] VerificationReport verify_derivative_at_zero(double r, double theta,
                                                           std::span<const double> h_sequence);

/// f'(t) < 0 at every grid point and f strictly decreasing between consecutive points.
[[nodiscard]] VerificationReport verify_f_monotone(double r, std::span<const double> t_grid);

/// Sign pattern of k and of d|k|/dK (analytic and by finite differences).
/// Throws PreconditionFailed unless r is below the first zero of f(K, .).
[[nodiscard]] VerificationReport verify_sign_theorem(double K, std::span<const double> theta_grid,
                                                     double r);

enum class BuiltinSurface { plane, sphere, pseudosphere };

/// Numeric geodesic curvature on the constructed spiral/loxodrome against the
/// closed forms: cos(theta)/r (plane), cot(r/R) cos(theta)/R (sphere, with
/// a = cot theta) and -cos(theta)/R (pseudosphere). Relative error on the
/// plane and sphere, absolute on the pseudosphere.
[[nodiscard]] VerificationReport verify_numeric_vs_closed_form(BuiltinSurface surface, double R,
                                                               double theta, int sample_count,
                                                               JetMode mode = JetMode::analytic,
                                                               double tolerance = 1e-5);

/// Direct and series branches of f on the ring |K| r^2 in [0.9e-4, 1.1e-4], relative.
[[nodiscard]] VerificationReport verify_seam_agreement(std::span<const double> r_values,
                                                       int ring_samples = 41,
                                                       double tolerance = 1e-12);

/// |k(+-h) - k(0)| shrinking monotonically for h = 1e-2, 1e-4, ..., and a
/// jump |k(+-1e-15) - k(0)| below the tolerance.
[[nodiscard]] VerificationReport verify_seam_continuity(double r, double theta,
                                                        double tolerance = 1e-12);

/// Finite-difference residual of (sqrt G)_rr + K sqrt G at `samples` radii.
[[nodiscard]] VerificationReport verify_jacobi_equation(double K, int samples = 100,
                                                        double tolerance = 1e-6);

/// sqrt G(1e-8) < 1e-7 and numeric (sqrt G)_r(1e-8) within 1e-6 of 1.
[[nodiscard]] VerificationReport verify_polar_limits(double K);

/// circle_curvature(K, r) against f(K, r), relative.
[[nodiscard]] VerificationReport verify_circle_curvature(double K, int samples = 50,
                                                         double tolerance = 1e-13);

} // namespace logspiral
