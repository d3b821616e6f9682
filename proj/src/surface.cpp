#include "logspiral/surface.hpp"

#include "logspiral/errors.hpp"
#include "logspiral/numerics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace logspiral {

namespace {

constexpr double kDegenerateCross = 1e-12;

std::string describe_point(double u, double v)
{
    std::ostringstream os;
    os.precision(17);
    os << "(u, v) = (" << u << ", " << v << ")";
    return os.str();
}

Jet2 revolution_jet(const ProfileCurve& c, double u, double v)
{
    const double cu = std::cos(u);
    const double su = std::sin(u);
    const double x = c.x(v);
    const double dx = c.dx(v);
    const double ddx = c.ddx(v);
    Jet2 j;
    j.p = {x * cu, x * su, c.z(v)};
    j.p_u = {-x * su, x * cu, 0.0};
    j.p_v = {dx * cu, dx * su, c.dz(v)};
    j.p_uu = {-x * cu, -x * su, 0.0};
    j.p_uv = {-dx * su, dx * cu, 0.0};
    j.p_vv = {ddx * cu, ddx * su, c.ddz(v)};
    return j;
}

SurfacePatch revolution_patch(SurfaceKind kind, ProfileCurve profile, Interval v_domain,
                              int orientation_sign, std::optional<double> known_K, double radius)
{
    if (!profile.x || !profile.z)
        raise(ErrorKind::BadParameter, "profile curve needs x(t) and z(t)");
    const ChartDomain domain{Interval::whole(), v_domain};
    auto eval = [x = profile.x, z = profile.z](double u, double v) {
        const double r = x(v);
        return Vec3{r * std::cos(u), r * std::sin(u), z(v)};
    };
    SurfacePatch::JetMap jet;
    if (profile.has_derivatives())
        jet = [c = std::move(profile)](double u, double v) { return revolution_jet(c, u, v); };
    return SurfacePatch(kind, std::move(eval), std::move(jet), domain, orientation_sign, known_K,
                        radius);
}

Jet2 finite_difference_jet(const SurfacePatch& patch, double u, double v)
{
    using numerics::richardson_first;
    using numerics::richardson_second;

    const double h1u = numerics::first_derivative_step(u);
    const double h1v = numerics::first_derivative_step(v);
    const double h2u = numerics::second_derivative_step(u);
    const double h2v = numerics::second_derivative_step(v);

    const auto& dom = patch.domain();
    if (!dom.u.contains(u - h2u) || !dom.u.contains(u + h2u) || !dom.v.contains(v - h2v) ||
        !dom.v.contains(v + h2v))
        raise(ErrorKind::OutOfDomain,
              "finite-difference stencil leaves the chart domain at " + describe_point(u, v));

    const auto along_u = [&](double s) { return patch.point(s, v); };
    const auto along_v = [&](double s) { return patch.point(u, s); };

    Jet2 j;
    j.p = patch.point(u, v);
    j.p_u = richardson_first<Vec3>(along_u, u, h1u).value;
    j.p_v = richardson_first<Vec3>(along_v, v, h1v).value;
    j.p_uu = richardson_second<Vec3>(along_u, u, h2u, j.p).value;
    j.p_vv = richardson_second<Vec3>(along_v, v, h2v, j.p).value;

    const auto mixed = [&](double scale) {
        const double hu = scale * h2u;
        const double hv = scale * h2v;
        return (patch.point(u + hu, v + hv) - patch.point(u + hu, v - hv) -
                patch.point(u - hu, v + hv) + patch.point(u - hu, v - hv)) /
               (4.0 * hu * hv);
    };
    j.p_uv = numerics::richardson(mixed(1.0), mixed(0.5));
    return j;
}

} // namespace

bool Interval::contains(double x) const noexcept
{
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

double Interval::distance_to_boundary(double x) const noexcept
{
    return std::min(x - lo, hi - x);
}

SurfacePatch::SurfacePatch(SurfaceKind kind, PointMap eval, JetMap analytic_jet, ChartDomain domain,
                           int orientation_sign, std::optional<double> known_K, double radius)
    : kind_(kind), eval_(std::move(eval)), analytic_jet_(std::move(analytic_jet)),
      domain_(domain), orientation_sign_(orientation_sign), known_K_(known_K), radius_(radius)
{
    if (!eval_)
        raise(ErrorKind::BadParameter, "surface patch needs an evaluation map");
    if (orientation_sign_ != 1 && orientation_sign_ != -1)
        raise(ErrorKind::BadParameter, "orientation sign must be +1 or -1");
    if (!(domain_.u.lo < domain_.u.hi) || !(domain_.v.lo < domain_.v.hi))
        raise(ErrorKind::BadParameter, "chart domain is degenerate");
}

bool SurfacePatch::contains(double u, double v) const noexcept
{
    return domain_.u.contains(u) && domain_.v.contains(v);
}

Jet2 SurfacePatch::analytic_jet(double u, double v) const
{
    if (!analytic_jet_)
        raise(ErrorKind::Unsupported, "surface has no analytic jet");
    return analytic_jet_(u, v);
}

SurfacePatch SurfacePatch::with_orientation(int sign) const
{
    SurfacePatch copy = *this;
    if (sign != 1 && sign != -1)
        raise(ErrorKind::BadParameter, "orientation sign must be +1 or -1");
    copy.orientation_sign_ = sign;
    return copy;
}

SurfacePatch make_plane()
{
    ProfileCurve c;
    c.x = [](double t) { return t; };
    c.z = [](double) { return 0.0; };
    c.dx = [](double) { return 1.0; };
    c.dz = [](double) { return 0.0; };
    c.ddx = [](double) { return 0.0; };
    c.ddz = [](double) { return 0.0; };
    // p_u x p_v = (0, 0, -v); the upward normal needs the negative sign.
    return revolution_patch(SurfaceKind::plane, std::move(c),
                            Interval::open(0.0, std::numeric_limits<double>::infinity()), -1, 0.0,
                            0.0);
}

SurfacePatch make_sphere(double R)
{
    if (!(R > 0.0) || !std::isfinite(R))
        raise(ErrorKind::BadParameter, "sphere radius must be positive");
    ProfileCurve c;
    c.x = [R](double t) { return R * std::sin(t); };
    c.z = [R](double t) { return R * std::cos(t); };
    c.dx = [R](double t) { return R * std::cos(t); };
    c.dz = [R](double t) { return -R * std::sin(t); };
    c.ddx = [R](double t) { return -R * std::sin(t); };
    c.ddz = [R](double t) { return -R * std::cos(t); };
    // Outward normal is -(p_u x p_v) in this chart.
    return revolution_patch(SurfaceKind::sphere, std::move(c), Interval::open(0.0, std::numbers::pi),
                            -1, 1.0 / (R * R), R);
}

SurfacePatch make_pseudosphere(double R, double v_floor)
{
    if (!(R > 0.0) || !std::isfinite(R))
        raise(ErrorKind::BadParameter, "pseudosphere radius must be positive");
    if (!(v_floor > 0.0 && v_floor < std::numbers::pi / 2))
        raise(ErrorKind::BadParameter, "pseudosphere v_floor must lie in (0, pi/2)");
    ProfileCurve c;
    c.x = [R](double t) { return R * std::sin(t); };
    c.z = [R](double t) { return R * (std::log(std::tan(t / 2.0)) + std::cos(t)); };
    c.dx = [R](double t) { return R * std::cos(t); };
    // d/dt [ln tan(t/2) + cos t] = 1/sin t - sin t = cos^2 t / sin t
    c.dz = [R](double t) {
        const double ct = std::cos(t);
        return R * ct * ct / std::sin(t);
    };
    c.ddx = [R](double t) { return -R * std::sin(t); };
    c.ddz = [R](double t) {
        const double ct = std::cos(t);
        const double st = std::sin(t);
        return R * (-2.0 * ct - ct * ct * ct / (st * st));
    };
    return revolution_patch(SurfaceKind::pseudosphere, std::move(c),
                            Interval::closed(v_floor, std::numbers::pi / 2), 1, -1.0 / (R * R), R);
}

SurfacePatch make_surface_of_revolution(ProfileCurve profile, Interval v_domain,
                                        int orientation_sign, std::optional<double> known_K)
{
    return revolution_patch(SurfaceKind::revolution, std::move(profile), v_domain,
                            orientation_sign, known_K, 0.0);
}

Jet2 eval_jet(const SurfacePatch& patch, double u, double v, JetMode mode)
{
    if (!patch.contains(u, v))
        raise(ErrorKind::OutOfDomain, "chart point outside the patch domain: " + describe_point(u, v));

    Jet2 jet = mode == JetMode::analytic ? patch.analytic_jet(u, v)
                                         : finite_difference_jet(patch, u, v);

    // Closed edges (the tractrix cusp at v = pi/2) are legitimate chart points
    // where the jet may degenerate; regularity is only demanded inside.
    const auto& dom = patch.domain();
    if (dom.u.interior(u) && dom.v.interior(v) && norm(cross(jet.p_u, jet.p_v)) < kDegenerateCross)
        raise(ErrorKind::DegenerateJet, "p_u x p_v vanishes at " + describe_point(u, v));
    return jet;
}

Vec3 unit_normal(const Jet2& jet, int orientation_sign)
{
    const Vec3 n = cross(jet.p_u, jet.p_v);
    const double len = norm(n);
    if (!(len >= kDegenerateCross))
        raise(ErrorKind::DegenerateJet, "cannot normalize p_u x p_v");
    return n * (static_cast<double>(orientation_sign) / len);
}

NormalPartials normal_partials(const Jet2& jet, int orientation_sign)
{
    const Vec3 n = cross(jet.p_u, jet.p_v);
    const double len = norm(n);
    if (!(len >= kDegenerateCross))
        raise(ErrorKind::DegenerateJet, "cannot normalize p_u x p_v");
    const Vec3 n_hat = n / len;
    const Vec3 n_u = cross(jet.p_uu, jet.p_v) + cross(jet.p_u, jet.p_uv);
    const Vec3 n_v = cross(jet.p_uv, jet.p_v) + cross(jet.p_u, jet.p_vv);
    // d(n/|n|) = (dn - n_hat <n_hat, dn>) / |n|
    const double s = static_cast<double>(orientation_sign);
    return {n_hat * s, (n_u - n_hat * dot(n_hat, n_u)) * (s / len),
            (n_v - n_hat * dot(n_hat, n_v)) * (s / len)};
}

FormCoefficients fundamental_forms(const Jet2& jet, int orientation_sign)
{
    const NormalPartials np = normal_partials(jet, orientation_sign);
    FormCoefficients c;
    c.E = dot(jet.p_u, jet.p_u);
    c.F = dot(jet.p_u, jet.p_v);
    c.G = dot(jet.p_v, jet.p_v);
    c.e = dot(np.N_u, jet.p_u);
    c.f = dot(np.N_u, jet.p_v);
    c.g = dot(np.N_v, jet.p_v);
    return c;
}

FormCoefficients fundamental_forms(const SurfacePatch& patch, double u, double v, JetMode mode)
{
    return fundamental_forms(eval_jet(patch, u, v, mode), patch.orientation_sign());
}

double gaussian_curvature(const SurfacePatch& patch, double u, double v, JetMode mode)
{
    const FormCoefficients c = fundamental_forms(patch, u, v, mode);
    const double det = c.metric_determinant();
    if (!(det > 0.0))
        raise(ErrorKind::DegenerateJet, "first fundamental form is not positive definite");
    return (c.e * c.g - c.f * c.f) / det;
}

} // namespace logspiral
