#include "logspiral/liouville.hpp"

#include "logspiral/errors.hpp"
#include "logspiral/numerics.hpp"

#include <cmath>
#include <numbers>

namespace logspiral {

LiouvilleBreakdown liouville_breakdown(const ChartCurve& curve, double t, JetMode mode)
{
    const SurfacePatch& patch = curve.patch();
    const ChartPoint cp = curve.at(t);
    const Jet2 jet = eval_jet(patch, cp.u, cp.v, mode);
    const double E = dot(jet.p_u, jet.p_u);
    const double F = dot(jet.p_u, jet.p_v);
    const double G = dot(jet.p_v, jet.p_v);
    if (!(std::abs(F) < 1e-10 * std::sqrt(E * G)))
        raise(ErrorKind::NotOrthogonal, "Liouville's formula needs <p_u, p_v> = 0");

    const ChartCurve parallel = coordinate_curve(patch, CoordinateCurve::parallel, cp.v);
    const ChartCurve meridian =
        coordinate_curve(patch, CoordinateCurve::meridian, cp.u, patch.orientation_sign());

    LiouvilleBreakdown b;
    b.k1 = geodesic_curvature_numeric(parallel, cp.u, mode);
    b.k2 = geodesic_curvature_numeric(meridian, cp.v, mode);
    b.theta = angle_to_parallel(curve, t, mode);

    const double h = std::min(numerics::first_derivative_step(t) * 100.0,
                              0.2 * curve.t_domain().distance_to_boundary(t));
    if (!(h > 0.0))
        raise(ErrorKind::OutOfDomain, "no room for an angle stencil at the domain edge");
    const auto angle = [&](double s) {
        // Unwrap relative to theta so the stencil never straddles the +-pi cut.
        return b.theta + std::remainder(angle_to_parallel(curve, s, mode) - b.theta,
                                        2.0 * std::numbers::pi);
    };
    const double dtheta_dt = numerics::richardson_first<double>(angle, t, h).value;
    const double ds_dt = norm(curve.velocity(t, mode));
    if (!(ds_dt > 0.0))
        raise(ErrorKind::DegenerateJet, "curve has zero speed");
    b.dtheta_ds = static_cast<double>(curve.direction_sign()) * dtheta_dt / ds_dt;

    b.k_liouville = b.k1 * std::cos(b.theta) + b.k2 * std::sin(b.theta) + b.dtheta_ds;
    b.k_direct = geodesic_curvature_numeric(curve, t, mode);
    b.residual = std::abs(b.k_liouville - b.k_direct);
    return b;
}

} // namespace logspiral
