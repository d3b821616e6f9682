#pragma once

#include "logspiral/curves.hpp"

namespace logspiral {

/// Terms of k = k1 cos(theta) + k2 sin(theta) + d(theta)/ds at one curve point.
///
/// k1 is the geodesic curvature of the parallel through the point (oriented by
/// increasing u) and k2 that of the meridian oriented along N x p_u, so the
/// pair forms a positive frame whatever the patch orientation. d(theta)/ds is
/// taken with respect to arc length, not the curve parameter.
struct LiouvilleBreakdown {
    double k1 = 0.0;
    double k2 = 0.0;
    double theta = 0.0;
    double dtheta_ds = 0.0;
    double k_liouville = 0.0;
    double k_direct = 0.0;
    double residual = 0.0;
};

/// Requires an orthogonal chart at the point: |F| < 1e-10 sqrt(EG), else NotOrthogonal.
[[nodiscard]] LiouvilleBreakdown liouville_breakdown(const ChartCurve& curve, double t,
                                                     JetMode mode = JetMode::analytic);

} // namespace logspiral
