#pragma once

#include <string_view>
#include <vector>

// Geodesic curvature of logarithmic spirals on surfaces of constant Gaussian
// curvature K, as a function of K and the distance r to the spiral's center:
//
//   k_theta(K, r) = cos(theta) * f(K, r),
//   f(K, r) = sqrt(K) cot(r sqrt(K))      K > 0, r sqrt(K) < pi
//           = 1 / r                       K = 0
//           = sqrt(-K) coth(r sqrt(-K))   K < 0
//
// f(K, r) is also the geodesic curvature of the positively oriented geodesic
// circle of radius r. Near K = 0 both branches are replaced by the series in
// z = K r^2, which is the same for either sign of K.
namespace logspiral {

/// Below this |K| r^2 the series replaces the trigonometric branches.
inline constexpr double kSeamThreshold = 1e-4;
/// Largest |K| r^2 accepted by series_k_small_K.
inline constexpr double kSeriesWindow = 0.1;

struct SpiralCurvatureQuery {
    double K = 0.0;
    double r = 1.0;
    double theta = 0.0;
};

enum class EvaluationMethod { closed_form, numeric, series };

[[nodiscard]] std::string_view to_string(EvaluationMethod method) noexcept;

/// Which evaluation path k_theta and f take at (K, r).
[[nodiscard]] EvaluationMethod evaluation_method(double K, double r) noexcept;

/// cos(theta) evaluated as sin(pi/2 - theta), so the double nearest pi/2 gives exactly 0.
[[nodiscard]] double characteristic_cosine(double theta) noexcept;

/// Throws DomainError unless r > 0, theta in (0, pi) and, for K > 0, r sqrt(K) < pi.
void check_admissible(const SpiralCurvatureQuery& q);

[[nodiscard]] double k_theta(const SpiralCurvatureQuery& q);
[[nodiscard]] inline double k_theta(double K, double r, double theta)
{
    return k_theta(SpiralCurvatureQuery{K, r, theta});
}

/// The auxiliary f(t) for fixed r; DomainError at the poles r sqrt(t) in pi Z.
[[nodiscard]] double f(double t, double r);

/// f'(t) for fixed r; principal branch only (r sqrt(t) < pi). f'(0) = -r/3.
[[nodiscard]] double f_prime(double t, double r);

/// cos(theta) (1/r) sum_{n < terms} c_n (K r^2)^n, the expansion of
/// sqrt(K) cot(r sqrt(K)); requires 2 <= terms <= 6 and |K| r^2 <= 0.1.
[[nodiscard]] double series_k_small_K(double K, double r, double theta, int terms);

/// Closed-form branch without the series switch. Test and diagnostic use.
[[nodiscard]] double f_direct(double t, double r);
/// Series branch of f with `terms` terms, no window check.
[[nodiscard]] double f_series(double t, double r, int terms = 4);

/// d k_theta / dK = cos(theta) f'(K); exactly -(r/3) cos(theta) at K = 0.
[[nodiscard]] double dk_dK(double K, double r, double theta);

/// d|k_theta|/dK = sign(k) dk_dK with sign(0) = 0.
[[nodiscard]] double d_abs_k_dK(double K, double r, double theta);

/// First positive r at which f(K, r) reaches zero: pi / (2 sqrt(K)) for K > 0, infinite otherwise.
[[nodiscard]] double first_zero_of_f(double K) noexcept;

/// Largest admissible r for the spiral at curvature K: pi / sqrt(K) for K > 0, infinite otherwise.
[[nodiscard]] double max_radius(double K) noexcept;

enum class ProfileAxis { r, K };

struct ProfileSample {
    double x = 0.0;
    double k = 0.0;
    EvaluationMethod method = EvaluationMethod::closed_form;
};

struct CurvatureProfile {
    ProfileAxis axis = ProfileAxis::r;
    double theta = 0.0;
    double fixed_value = 0.0;
    std::vector<ProfileSample> samples;
};

/// k_theta sampled at `steps` evenly spaced points of [min, max] along the
/// chosen axis with the other coordinate fixed. The whole range is checked
/// before any sample is produced.
[[nodiscard]] CurvatureProfile sweep_profile(ProfileAxis axis, double fixed, double min, double max,
                                             int steps, double theta);

} // namespace logspiral
