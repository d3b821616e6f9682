#pragma once

#include "logspiral/vec3.hpp"

#include <functional>
#include <limits>
#include <optional>

namespace logspiral {

/// One axis of a chart domain. Infinite bounds are always open.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_closed = false;
    bool hi_closed = false;

    [[nodiscard]] bool contains(double x) const noexcept;
    /// Strictly between the bounds, regardless of the closedness flags.
    [[nodiscard]] bool interior(double x) const noexcept { return x > lo && x < hi; }
    [[nodiscard]] double distance_to_boundary(double x) const noexcept;

    static Interval open(double lo, double hi) { return {lo, hi, false, false}; }
    static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
    static Interval whole() { return {}; }
};

struct ChartDomain {
    Interval u;
    Interval v;
};

/// Position and partial derivatives of a parametrization at one chart point.
struct Jet2 {
    Vec3 p;
    Vec3 p_u;
    Vec3 p_v;
    Vec3 p_uu;
    Vec3 p_uv;
    Vec3 p_vv;
};

/// First (E, F, G) and second (e, f, g) fundamental form coefficients.
struct FormCoefficients {
    double E = 0.0;
    double F = 0.0;
    double G = 0.0;
    double e = 0.0;
    double f = 0.0;
    double g = 0.0;

    [[nodiscard]] double metric_determinant() const noexcept { return E * G - F * F; }
};

enum class JetMode { analytic, finite_difference };

enum class SurfaceKind { plane, sphere, pseudosphere, revolution };

/// Generating curve alpha(t) = (x(t), z(t)) of a surface of revolution, with
/// optional derivatives. Without all four derivatives only finite-difference
/// jets are available.
struct ProfileCurve {
    std::function<double(double)> x;
    std::function<double(double)> z;
    std::function<double(double)> dx;
    std::function<double(double)> dz;
    std::function<double(double)> ddx;
    std::function<double(double)> ddz;

    [[nodiscard]] bool has_derivatives() const noexcept { return dx && dz && ddx && ddz; }
};

/// A parametrization (u, v) -> R^3 together with its domain, an orientation
/// sign selecting N = sign * (p_u x p_v) / |p_u x p_v|, and, when known, the
/// constant Gaussian curvature it was built to have.
class SurfacePatch {
public:
    using PointMap = std::function<Vec3(double, double)>;
    using JetMap = std::function<Jet2(double, double)>;

    SurfacePatch(SurfaceKind kind, PointMap eval, JetMap analytic_jet, ChartDomain domain,
                 int orientation_sign, std::optional<double> known_K, double radius = 0.0);

    [[nodiscard]] SurfaceKind kind() const noexcept { return kind_; }
    [[nodiscard]] const ChartDomain& domain() const noexcept { return domain_; }
    [[nodiscard]] int orientation_sign() const noexcept { return orientation_sign_; }
    [[nodiscard]] std::optional<double> known_K() const noexcept { return known_K_; }
    /// R for the sphere and pseudosphere built-ins; zero otherwise.
    [[nodiscard]] double radius() const noexcept { return radius_; }
    [[nodiscard]] bool has_analytic_jet() const noexcept { return static_cast<bool>(analytic_jet_); }

    [[nodiscard]] bool contains(double u, double v) const noexcept;

    /// Position without any domain check.
    [[nodiscard]] Vec3 point(double u, double v) const { return eval_(u, v); }
    /// Analytic jet without any domain check; requires has_analytic_jet().
    [[nodiscard]] Jet2 analytic_jet(double u, double v) const;

    [[nodiscard]] SurfacePatch with_orientation(int sign) const;

private:
    SurfaceKind kind_;
    PointMap eval_;
    JetMap analytic_jet_;
    ChartDomain domain_;
    int orientation_sign_;
    std::optional<double> known_K_;
    double radius_;
};

/// Polar parametrization (v cos u, v sin u, 0) of the xy-plane, oriented by (0, 0, 1).
[[nodiscard]] SurfacePatch make_plane();

/// (R sin v cos u, R sin v sin u, R cos v), v in (0, pi), outward normal.
[[nodiscard]] SurfacePatch make_sphere(double R);

inline constexpr double kPseudosphereVFloor = 1e-3;

/// Revolved tractrix (R sin v cos u, R sin v sin u, R ln tan(v/2) + R cos v),
/// v in [v_floor, pi/2], oriented by +(p_u x p_v).
[[nodiscard]] SurfacePatch make_pseudosphere(double R, double v_floor = kPseudosphereVFloor);

/// Standard parametrization (x(v) cos u, x(v) sin u, z(v)) of a surface of revolution.
[[nodiscard]] SurfacePatch make_surface_of_revolution(ProfileCurve profile, Interval v_domain,
                                                      int orientation_sign = 1,
                                                      std::optional<double> known_K = std::nullopt);

/// Jet at (u, v). Finite-difference mode uses central differences with one
/// Richardson level: cbrt(eps) steps for first partials, eps^(1/4) for second.
/// Throws OutOfDomain outside the domain (or when the stencil leaves it) and
/// DegenerateJet at interior points where |p_u x p_v| < 1e-12.
[[nodiscard]] Jet2 eval_jet(const SurfacePatch& patch, double u, double v,
                            JetMode mode = JetMode::analytic);

[[nodiscard]] Vec3 unit_normal(const Jet2& jet, int orientation_sign);

struct NormalPartials {
    Vec3 N;
    Vec3 N_u;
    Vec3 N_v;
};

/// N and its chart partials, differentiated through the jet's second partials.
[[nodiscard]] NormalPartials normal_partials(const Jet2& jet, int orientation_sign);

/// E, F, G from the first partials; e = <N_u, p_u>, f = <N_u, p_v>, g = <N_v, p_v>.
[[nodiscard]] FormCoefficients fundamental_forms(const Jet2& jet, int orientation_sign);
[[nodiscard]] FormCoefficients fundamental_forms(const SurfacePatch& patch, double u, double v,
                                                 JetMode mode = JetMode::analytic);

/// K = (eg - f^2) / (EG - F^2).
[[nodiscard]] double gaussian_curvature(const SurfacePatch& patch, double u, double v,
                                        JetMode mode = JetMode::analytic);

} // namespace logspiral
